#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "doctest.h"
#include "helpers.hpp"

#include "cubicspec/exact_linalg.hpp"
#include "cubicspec/families.hpp"
#include "cubicspec/spectra.hpp"

using namespace cubicspec;
using namespace cubicspec::families;
using cubicspec::testing::error_kind;
using cubicspec::testing::kind;

namespace {

std::vector<double> sorted(std::vector<double> xs) {
  std::sort(xs.begin(), xs.end());
  return xs;
}

bool close_multisets(std::vector<double> a, std::vector<double> b, double tol = kMatchTol) {
  a = sorted(a);
  b = sorted(b);
  return a.size() == b.size() && max_abs_diff(a, b) < tol;
}

void check_against_numeric(const std::vector<double>& closed, const Multigraph& g) {
  CHECK(close_multisets(closed, numeric_spectrum(g)));
}

}  // namespace

TEST_CASE("numeric_spectrum") {
  CHECK(close_multisets(numeric_spectrum(cycle(4)), {-2, 0, 0, 2}));
  CHECK(close_multisets(numeric_spectrum(triple_edge()), {-3, 3}));
  CHECK(close_multisets(numeric_spectrum(petersen()), {-2, -2, -2, -2, 1, 1, 1, 1, 1, 3}));
  const auto s = numeric_spectrum(prism(7));
  CHECK(std::is_sorted(s.begin(), s.end()));
  CHECK(numeric_spectrum(Multigraph::from_edge_list(0, {})).empty());
}

TEST_CASE("f2n_closed_spectrum") {
  CHECK(close_multisets(f2n_closed_spectrum(2), {3, 1, -1, -3}));
  const auto s3 = f2n_closed_spectrum(3);
  CHECK(count_near(s3, 3.0) == 1);
  CHECK(count_near(s3, -3.0) == 1);
  CHECK(count_near(s3, std::sqrt(3.0)) == 2);
  CHECK(count_near(s3, -std::sqrt(3.0)) == 2);
  check_against_numeric(f2n_closed_spectrum(4), f2n(4));
}

TEST_CASE("prism_closed_spectrum") {
  CHECK(close_multisets(prism_closed_spectrum(3), {3, 1, 0, 0, -2, -2}));
  CHECK(close_multisets(prism_closed_spectrum(4), {3, 1, 1, 1, -1, -1, -1, -3}));
  check_against_numeric(prism_closed_spectrum(5), prism(5));
}

TEST_CASE("gp_closed_spectrum") {
  CHECK(close_multisets(gp_closed_spectrum(5, 2), {3, 1, 1, 1, 1, 1, -2, -2, -2, -2}));
  CHECK(close_multisets(gp_closed_spectrum(4, 1), {3, 1, 1, 1, -1, -1, -1, -3}));
}

TEST_CASE("gp root pairs satisfy the quadratic") {
  for (std::size_t n = 3; n <= 20; ++n) {
    for (std::size_t k = 1; k < n; ++k) {
      if ((2 * k) % n == 0) continue;
      const auto pairs = gp_closed_root_pairs(n, k);
      REQUIRE(pairs.size() == n);
      for (std::size_t j = 0; j < n; ++j) {
        const double a = 2 * std::cos(2 * M_PI * static_cast<double>(j) / static_cast<double>(n));
        const double b =
            2 * std::cos(2 * M_PI * static_cast<double>((j * k) % n) / static_cast<double>(n));
        const auto [x1, x2] = pairs[j];
        CHECK(std::abs(x1 + x2 - (a + b)) < 1e-12);
        CHECK(std::abs(x1 * x2 - (a * b - 1)) < 1e-12);
        CHECK(x1 != doctest::Approx(x2));
      }
    }
  }
}

TEST_CASE("tm_closed_spectrum") {
  const auto s = tm_closed_spectrum(3);
  CHECK(s.size() == 18);
  CHECK(count_near(s, 3.0, 1e-9) == 1);
  check_against_numeric(s, t_m(3));
  CHECK(count_near(tm_closed_spectrum(4), 1.0, 1e-9) == 5);
}

TEST_CASE("truncation_closed_spectrum") {
  const std::vector<double> k4{3, -1, -1, -1};
  CHECK(close_multisets(truncation_closed_spectrum(k4),
                        {3, -2, 2, -1, 2, -1, 2, -1, -2, -2, 0, 0}));
  const auto k33 = numeric_spectrum(complete_bipartite(3, 3));
  CHECK(count_near(truncation_closed_spectrum(k33), 1.0, 1e-9) == 1);
  CHECK(error_kind([] {
          const std::vector<double> odd{3, 1, -1};
          truncation_closed_spectrum(odd);
        }) == kind(ErrorKind::BadMultiplicity));
  CHECK(error_kind([] {
          const std::vector<double> big{4, -4};
          truncation_closed_spectrum(big);
        }) == kind(ErrorKind::OutOfRange));
  for (const auto& g : {complete(4), complete_bipartite(3, 3), prism(4), triple_edge(), petersen()}) {
    check_against_numeric(truncation_closed_spectrum(numeric_spectrum(g)), truncate_cubic(g));
  }
}

TEST_CASE("spectrum_report") {
  const auto p = spectrum_report(petersen());
  CHECK(p.integer_eigs == std::vector<std::pair<long, std::size_t>>{{-2, 4}, {1, 5}, {3, 1}});
  CHECK(p.n == 10);
  CHECK(p.edges.size() == 15);
  CHECK(p.source == SpectrumSource::ExactRank);

  const auto f = spectrum_report(f2n(4));
  for (long lambda : {1L, -1L, 3L, -3L}) {
    CHECK(std::find(f.integer_eigs.begin(), f.integer_eigs.end(), std::pair<long, std::size_t>{lambda, 1}) !=
          f.integer_eigs.end());
  }
  CHECK(spectrum_report(cycle(5)).integer_eigs == std::vector<std::pair<long, std::size_t>>{{2, 1}});
  CHECK(source_name(SpectrumSource::ClosedForm) == "closed-form");
}

TEST_CASE("property: report invariants on random multigraphs") {
  std::mt19937 rng(555);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + rng() % 11;
    const auto g = cubicspec::testing::random_multigraph(rng, n, rng() % (2 * n));
    const auto r = spectrum_report(g);
    CHECK(r.numeric_eigs.size() == n);
    const double trace = std::accumulate(r.numeric_eigs.begin(), r.numeric_eigs.end(), 0.0);
    double squares = 0;
    for (double x : r.numeric_eigs) squares += x * x;
    // trace of A^2 counts parallel edges with multiplicity squared
    double a2 = 0;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = 0; v < n; ++v) a2 += std::pow(static_cast<double>(g.multiplicity(u, v)), 2);
    }
    CHECK(std::abs(trace) < 1e-6);
    CHECK(std::abs(squares - a2) < 1e-6);
    for (auto [lambda, mult] : r.integer_eigs) {
      CHECK(mult > 0);
      CHECK(count_near(r.numeric_eigs, static_cast<double>(lambda)) == mult);
    }
  }
}

TEST_CASE("property: closed forms equal numeric spectra on the grid") {
  for (std::size_t n = 2; n <= 20; ++n) check_against_numeric(f2n_closed_spectrum(n), f2n(n));
  for (std::size_t n = 3; n <= 20; ++n) check_against_numeric(prism_closed_spectrum(n), prism(n));
  for (std::size_t n = 3; n <= 20; ++n) {
    for (std::size_t k = 1; k < n; ++k) {
      if ((2 * k) % n == 0) continue;
      CAPTURE(n);
      CAPTURE(k);
      check_against_numeric(gp_closed_spectrum(n, k), gen_petersen(n, k));
    }
  }
  for (std::size_t m = 3; m <= 8; ++m) check_against_numeric(tm_closed_spectrum(m), t_m(m));
}

TEST_CASE("property: bipartite spectra are symmetric") {
  for (const auto& g : {f2n(5), prism(6), complete_bipartite(3, 3), gen_petersen(8, 3), t_m(4),
                        gen_petersen(10, 3)}) {
    if (!bipartition(g)) continue;
    const auto s = numeric_spectrum(g);
    for (std::size_t i = 0; i < s.size(); ++i) CHECK(std::abs(s[i] + s[s.size() - 1 - i]) < 1e-9);
  }
  CHECK(bipartition(f2n(5)).has_value());
}
