#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cubicspec/multigraph.hpp"

namespace cubicspec {

// Closed-form answers to "is 1 a simple eigenvalue?" for each family.
bool predict_f2n(std::size_t n);
bool predict_prism(std::size_t n);
// Conjunctive reading: 4 | n requires k even, 5 | n requires
// k not congruent to 2 or 3 mod 5; with neither divisor the answer is true.
bool predict_gp(std::size_t n, std::size_t k);
// Same, but with the 5 | n clause taken as k not in {2, 3, n-3, n-2}.
// Agrees with predict_gp for n in {5, 10}; wrong from n = 15 on, e.g. P(15,7).
bool predict_gp_literal(std::size_t n, std::size_t k);
bool predict_tm(std::size_t m);
// For a connected cubic graph G: true iff G is bipartite. Throws NotCubic or
// Disconnected.
bool predict_truncation(const Multigraph& g);

struct VerificationRow {
  std::string params;
  bool predicted = false;
  std::size_t multiplicity = 0;  // exact multiplicity of eigenvalue 1
  bool agree = false;            // predicted == (multiplicity == 1)
  // Multiplicity from the trigonometric count, for families that have one.
  std::optional<std::size_t> closed_count;
  std::optional<bool> vertex_transitive;  // informational (gp only)
  std::optional<std::string> error;       // row failed; other fields unset

  bool count_agrees() const { return !closed_count || *closed_count == multiplicity; }
  bool ok() const { return !error && agree && count_agrees(); }
};

struct VerificationReport {
  std::string family;
  std::string grid;
  std::vector<VerificationRow> rows;  // grid order
  std::size_t agreed = 0;
  std::size_t disagreed = 0;
  std::size_t errored = 0;
};

// family is one of "f2n", "prism", "gp", "tm", "truncation". For "gp" the
// range is over n with every valid k; "truncation" ignores the range and runs
// over truncation_test_graphs(). Rows that throw are recorded and the sweep
// continues.
VerificationReport verify_family(const std::string& family, std::size_t lo, std::size_t hi);

// Twenty named connected cubic graphs, bipartite and not, including multigraphs.
std::vector<std::pair<std::string, Multigraph>> truncation_test_graphs();

}  // namespace cubicspec
