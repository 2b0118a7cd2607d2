#include "doctest.h"
#include "helpers.hpp"

#include "cubicspec/classify.hpp"
#include "cubicspec/exact_linalg.hpp"
#include "cubicspec/families.hpp"

using namespace cubicspec;
using cubicspec::testing::error_kind;
using cubicspec::testing::kind;

TEST_CASE("predicates") {
  CHECK(predict_f2n(2));
  CHECK_FALSE(predict_f2n(3));
  CHECK(predict_f2n(100));

  CHECK(predict_prism(3));
  CHECK_FALSE(predict_prism(4));
  CHECK(predict_prism(5));

  CHECK(predict_gp(7, 2));
  CHECK(predict_gp(8, 2));
  CHECK_FALSE(predict_gp(10, 2));

  CHECK(predict_tm(3));
  CHECK_FALSE(predict_tm(4));
  CHECK_FALSE(predict_tm(10));

  CHECK_FALSE(predict_truncation(families::complete(4)));
  CHECK(predict_truncation(families::complete_bipartite(3, 3)));
  CHECK(predict_truncation(families::triple_edge()));
  CHECK(error_kind([] { predict_truncation(families::cycle(4)); }) == kind(ErrorKind::NotCubic));
}

TEST_CASE("gp predicate is symmetric under k -> n-k, and so is the oracle") {
  for (std::size_t n = 3; n <= 30; ++n) {
    for (std::size_t k = 1; k < n; ++k) {
      if ((2 * k) % n == 0) continue;
      CHECK(predict_gp(n, k) == predict_gp(n, n - k));
      if (n <= 20) {
        CHECK(eigen_multiplicity(families::gen_petersen(n, k), 1) ==
              eigen_multiplicity(families::gen_petersen(n, n - k), 1));
      }
    }
  }
}

TEST_CASE("overlap case n = 20 is pinned") {
  // both divisor clauses apply; only k even with k = 0, 1, 4 mod 5 survives
  for (std::size_t k = 1; k < 20; ++k) {
    if (k == 10) continue;
    CAPTURE(k);
    const bool simple = eigen_multiplicity(families::gen_petersen(20, k), 1) == 1;
    CHECK(simple == (k % 2 == 0 && k % 5 != 2 && k % 5 != 3));
    CHECK(simple == predict_gp(20, k));
  }
}

TEST_CASE("5 | n clause is a congruence, not the literal set {2, 3, n-3, n-2}") {
  // the two readings coincide for n = 5, 10
  for (std::size_t n : {5u, 10u}) {
    for (std::size_t k = 1; k < n; ++k) {
      if ((2 * k) % n != 0) CHECK(predict_gp(n, k) == predict_gp_literal(n, k));
    }
  }
  // and part ways from n = 15 on, where the oracle sides with the congruence
  for (auto [n, k] : {std::pair<std::size_t, std::size_t>{15, 7}, {15, 8}, {25, 7}, {30, 12}}) {
    CAPTURE(n);
    CAPTURE(k);
    CHECK(predict_gp_literal(n, k));
    CHECK_FALSE(predict_gp(n, k));
    CHECK(eigen_multiplicity(families::gen_petersen(n, k), 1) == 5);
  }
}

TEST_CASE("verify_family sweeps agree with the oracle") {
  struct Sweep {
    const char* family;
    std::size_t lo, hi, rows;
  };
  for (const auto& s : {Sweep{"f2n", 2, 40, 39}, Sweep{"prism", 3, 40, 38}, Sweep{"gp", 3, 30, 0},
                        Sweep{"tm", 3, 10, 8}, Sweep{"truncation", 0, 0, 20}}) {
    CAPTURE(s.family);
    const auto r = verify_family(s.family, s.lo, s.hi);
    if (s.rows) CHECK(r.rows.size() == s.rows);
    CHECK(r.agreed + r.disagreed + r.errored == r.rows.size());
    CHECK(r.disagreed == 0);
    CHECK(r.errored == 0);
    for (const auto& row : r.rows) {
      CHECK(row.agree == (row.predicted == (row.multiplicity == 1)));
      CHECK(row.count_agrees());
    }
  }
}

TEST_CASE("verify_family marks errored rows and continues") {
  const auto r = verify_family("gp", 5, 6);
  // n = 6, k = 3 is skipped as invalid, so no row errors here
  CHECK(r.errored == 0);
  const auto bad = verify_family("f2n", 1, 3);
  CHECK(bad.rows.size() == 3);
  CHECK(bad.errored == 1);
  REQUIRE(bad.rows[0].error.has_value());
  CHECK(bad.rows[0].params == "1");
  CHECK_FALSE(bad.rows[0].ok());
  CHECK(error_kind([] { verify_family("cubes", 1, 2); }) == kind(ErrorKind::InvalidArgument));
}

TEST_CASE("truncation grid includes non-bipartite graphs") {
  const auto graphs = truncation_test_graphs();
  CHECK(graphs.size() == 20);
  std::size_t non_bipartite = 0;
  for (const auto& [name, g] : graphs) {
    CHECK(is_cubic(g));
    if (!bipartition(g)) ++non_bipartite;
  }
  CHECK(non_bipartite >= 5);
}
