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

void check_cubic_connected(const Multigraph& g) {
  CHECK(is_cubic(g));
  CHECK(is_connected(g));
}

std::size_t triangle_count(const Multigraph& g) {
  std::size_t count = 0;
  for (Vertex a = 0; a < g.vertex_count(); ++a) {
    for (Vertex b = a + 1; b < g.vertex_count(); ++b) {
      if (!g.multiplicity(a, b)) continue;
      for (Vertex c = b + 1; c < g.vertex_count(); ++c) {
        if (g.multiplicity(a, c) && g.multiplicity(b, c)) ++count;
      }
    }
  }
  return count;
}

}  // namespace

TEST_CASE("f2n") {
  const auto f4 = f2n(2);
  CHECK(f4.vertex_count() == 4);
  CHECK(f4.edge_count() == 6);
  check_cubic_connected(f4);
  check_cubic_connected(f2n(3));
  CHECK(f2n(3).vertex_count() == 6);
  CHECK(eigen_multiplicity(f2n(4), 1) == 1);
  CHECK(eigen_multiplicity(f2n(3), 1) == 0);
  CHECK(error_kind([] { f2n(1); }) == kind(ErrorKind::TooSmall));
}

TEST_CASE("prism") {
  CHECK(prism(3).vertex_count() == 6);
  CHECK(eigen_multiplicity(prism(3), 1) == 1);
  CHECK(eigen_multiplicity(prism(4), 1) == 3);
  CHECK(eigen_multiplicity(prism(8), 1) == 3);
  CHECK(prism(5).multiplicity(2, 7) == 1);
  CHECK(error_kind([] { prism(2); }) == kind(ErrorKind::TooSmall));
}

TEST_CASE("gen_petersen") {
  const auto p = gen_petersen(5, 2);
  CHECK(p == petersen());
  CHECK(p.vertex_count() == 10);
  CHECK(triangle_count(p) == 0);
  CHECK(max_abs_diff(numeric_spectrum(gen_petersen(4, 1)), numeric_spectrum(prism(4))) < kMatchTol);
  CHECK(error_kind([] { gen_petersen(6, 3); }) == kind(ErrorKind::DegenerateStep));
  CHECK(error_kind([] { gen_petersen(2, 1); }) == kind(ErrorKind::TooSmall));
  CHECK(error_kind([] { gen_petersen(7, 0); }) == kind(ErrorKind::OutOfRange));
  CHECK(error_kind([] { gen_petersen(7, 7); }) == kind(ErrorKind::OutOfRange));
}

TEST_CASE("gp_is_vertex_transitive") {
  CHECK(gp_is_vertex_transitive(10, 2));
  CHECK(gp_is_vertex_transitive(5, 2));
  CHECK_FALSE(gp_is_vertex_transitive(7, 2));
  CHECK(gp_is_vertex_transitive(8, 3));
  CHECK(gp_is_vertex_transitive(12, 5));
  CHECK(gp_is_vertex_transitive(9, 1));
}

TEST_CASE("t_m") {
  const auto t3 = t_m(3);
  CHECK(t3.vertex_count() == 18);
  check_cubic_connected(t3);
  CHECK(eigen_multiplicity(t3, 1) == 1);
  CHECK(eigen_multiplicity(t_m(4), 1) == 5);
  CHECK(eigen_multiplicity(t_m(5), 1) == 9);
  // plus (1,2) -- minus (2,1)
  CHECK(t3.multiplicity(1 * 3 + 2, 9 + 2 * 3 + 1) == 1);
  CHECK(error_kind([] { t_m(2); }) == kind(ErrorKind::TooSmall));
}

TEST_CASE("truncate_cubic") {
  const auto tk4 = truncate_cubic(complete(4));
  CHECK(tk4.vertex_count() == 12);
  CHECK(eigen_multiplicity(tk4, 1) == 0);
  const auto tk33 = truncate_cubic(complete_bipartite(3, 3));
  CHECK(tk33.vertex_count() == 18);
  CHECK(eigen_multiplicity(tk33, 1) == 1);
  const auto tt = truncate_cubic(triple_edge());
  CHECK(tt.vertex_count() == 6);
  CHECK(eigen_multiplicity(tt, 1) == 1);
  CHECK(tt == prism(3));
  CHECK(error_kind([] { truncate_cubic(cycle(4)); }) == kind(ErrorKind::NotCubic));
}

TEST_CASE("property: generators are cubic and connected") {
  for (std::size_t n = 2; n <= 20; ++n) check_cubic_connected(f2n(n));
  for (std::size_t n = 3; n <= 20; ++n) check_cubic_connected(prism(n));
  for (std::size_t n = 3; n <= 20; ++n) {
    for (std::size_t k = 1; k < n; ++k) {
      if ((2 * k) % n == 0) continue;
      CAPTURE(n);
      CAPTURE(k);
      const auto g = gen_petersen(n, k);
      CHECK(is_cubic(g));
      CHECK(g.vertex_count() == 2 * n);
      // P(n,k) is connected; distinct inner cycles still meet the outer rim
      CHECK(is_connected(g));
    }
  }
  for (std::size_t m = 3; m <= 8; ++m) check_cubic_connected(t_m(m));
}

TEST_CASE("property: gen_petersen(n,1) and prism(n) share a spectrum") {
  for (std::size_t n = 3; n <= 12; ++n) {
    CAPTURE(n);
    CHECK(max_abs_diff(numeric_spectrum(gen_petersen(n, 1)), numeric_spectrum(prism(n))) < kMatchTol);
  }
}

TEST_CASE("property: truncation of a simple girth>3 cubic graph has n triangles") {
  for (const auto& g : {complete_bipartite(3, 3), petersen(), prism(4), prism(7), gen_petersen(8, 3),
                        t_m(4)}) {
    const auto t = truncate_cubic(g);
    CHECK(is_cubic(t));
    CHECK(t.vertex_count() == 3 * g.vertex_count());
    CHECK(triangle_count(t) == g.vertex_count());
  }
}
