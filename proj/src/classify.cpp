#include "cubicspec/classify.hpp"

#include <functional>

#include "cubicspec/cosine.hpp"
#include "cubicspec/error.hpp"
#include "cubicspec/exact_linalg.hpp"
#include "cubicspec/families.hpp"

namespace cubicspec {

bool predict_f2n(std::size_t n) { return n % 2 == 0; }

bool predict_prism(std::size_t n) { return n % 4 != 0; }

bool predict_gp(std::size_t n, std::size_t k) {
  if (n % 4 == 0 && k % 2 != 0) return false;
  if (n % 5 == 0 && (k % 5 == 2 || k % 5 == 3)) return false;
  return true;
}

bool predict_gp_literal(std::size_t n, std::size_t k) {
  if (n % 4 == 0 && k % 2 != 0) return false;
  if (n % 5 == 0) {
    const std::size_t r = k % n;
    if (r == 2 || r == 3 || r == n - 3 || r == n - 2) return false;
  }
  return true;
}

bool predict_tm(std::size_t m) { return m % 4 != 0 && m % 5 != 0; }

bool predict_truncation(const Multigraph& g) {
  if (!is_cubic(g)) fail(ErrorKind::NotCubic, "predict_truncation: graph is not cubic");
  if (!is_connected(g)) fail(ErrorKind::Disconnected, "predict_truncation: graph is disconnected");
  return bipartition(g).has_value();
}

std::vector<std::pair<std::string, Multigraph>> truncation_test_graphs() {
  using namespace families;
  std::vector<std::pair<std::string, Multigraph>> out;
  out.emplace_back("K4", complete(4));
  out.emplace_back("K3,3", complete_bipartite(3, 3));
  out.emplace_back("triple-edge", triple_edge());
  out.emplace_back("petersen", petersen());
  for (std::size_t n = 3; n <= 8; ++n) out.emplace_back("prism " + std::to_string(n), prism(n));
  for (std::size_t n = 2; n <= 5; ++n) out.emplace_back("f2n " + std::to_string(n), f2n(n));
  out.emplace_back("gp 7 2", gen_petersen(7, 2));
  out.emplace_back("gp 8 3", gen_petersen(8, 3));
  out.emplace_back("gp 9 2", gen_petersen(9, 2));
  out.emplace_back("gp 10 3", gen_petersen(10, 3));
  out.emplace_back("gp 12 5", gen_petersen(12, 5));
  out.emplace_back("tm 3", t_m(3));
  return out;
}

namespace {

void tally(VerificationReport& report) {
  for (const auto& row : report.rows) {
    if (row.error) {
      ++report.errored;
    } else if (row.ok()) {
      ++report.agreed;
    } else {
      ++report.disagreed;
    }
  }
}

// Builds the graph and the prediction; either may throw, which marks the row.
void run_row(VerificationReport& report, std::string params,
             const std::function<void(VerificationRow&)>& fill,
             const std::function<Multigraph()>& build) {
  VerificationRow row;
  row.params = std::move(params);
  try {
    fill(row);
    const Multigraph g = build();
    row.multiplicity = eigen_multiplicity(g, 1);
    row.agree = row.predicted == (row.multiplicity == 1);
  } catch (const Error& e) {
    std::string kept = std::move(row.params);
    row = VerificationRow{};
    row.params = std::move(kept);
    row.error = std::string(error_name(e.kind())) + ": " + e.what();
  }
  report.rows.push_back(std::move(row));
}

}  // namespace

VerificationReport verify_family(const std::string& family, std::size_t lo, std::size_t hi) {
  VerificationReport report;
  report.family = family;
  report.grid = std::to_string(lo) + ".." + std::to_string(hi);
  if (family == "f2n") {
    for (std::size_t n = lo; n <= hi; ++n) {
      run_row(report, std::to_string(n), [n](VerificationRow& r) { r.predicted = predict_f2n(n); },
              [n] { return families::f2n(n); });
    }
  } else if (family == "prism") {
    for (std::size_t n = lo; n <= hi; ++n) {
      run_row(report, std::to_string(n),
              [n](VerificationRow& r) { r.predicted = predict_prism(n); },
              [n] { return families::prism(n); });
    }
  } else if (family == "gp") {
    for (std::size_t n = lo; n <= hi; ++n) {
      for (std::size_t k = 1; k < n; ++k) {
        if ((2 * k) % n == 0) continue;
        run_row(
            report, std::to_string(n) + " " + std::to_string(k),
            [n, k](VerificationRow& r) {
              r.predicted = predict_gp(n, k);
              r.closed_count = gp_one_multiplicity(n, k);
              r.vertex_transitive = families::gp_is_vertex_transitive(n, k);
            },
            [n, k] { return families::gen_petersen(n, k); });
      }
    }
  } else if (family == "tm") {
    for (std::size_t m = lo; m <= hi; ++m) {
      run_row(
          report, std::to_string(m),
          [m](VerificationRow& r) {
            r.predicted = predict_tm(m);
            r.closed_count = roots1_solutions(m).solutions.size();
          },
          [m] { return families::t_m(m); });
    }
  } else if (family == "truncation") {
    report.grid = "standard-20";
    for (auto& [name, g] : truncation_test_graphs()) {
      const Multigraph base = g;
      run_row(report, name, [&base](VerificationRow& r) { r.predicted = predict_truncation(base); },
              [&base] { return families::truncate_cubic(base); });
    }
  } else {
    fail(ErrorKind::InvalidArgument, "unknown family '" + family + "'");
  }
  tally(report);
  return report;
}

}  // namespace cubicspec
