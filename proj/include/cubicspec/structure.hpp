#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "cubicspec/exact_linalg.hpp"
#include "cubicspec/multigraph.hpp"

namespace cubicspec {

// Sign classes of the +-1 eigenvector for eigenvalue 1 of a cubic graph.
struct SignPartition {
  VertexSet vplus;   // sorted, contains vertex 0
  VertexSet vminus;  // sorted
  std::vector<Edge> matching;  // (plus endpoint, minus endpoint), edge order
  std::vector<Cycle> plus_cycles;   // original labels, canonical cycle form
  std::vector<Cycle> minus_cycles;
  std::size_t cycle_count = 0;   // m in type C(m,k)
  std::size_t cycle_length = 0;  // k in type C(m,k)
};

struct QuotientMatrix {
  std::vector<VertexSet> parts;
  IntMatrix b;
};

// The unique (up to sign) eigenvector for a simple integer eigenvalue, scaled
// so entry 0 is +1. Throws NotSimple or NotPlusMinusOne.
std::vector<int> pm1_eigenvector(const Multigraph& g, long lambda);

// Throws NotCubic, Disconnected, the pm1_eigenvector errors, or
// StructureViolation naming the failed property ("two-regular-sides",
// "perfect-matching", "equal-cycle-lengths").
SignPartition sign_partition(const Multigraph& g);

inline constexpr std::size_t kMaxExhaustiveOrder = 24;

// Number of unordered partitions {V1, V2} of a cubic graph in which both
// parts induce 2-regular subgraphs. Exhaustive branch-and-prune; n <= 24.
std::size_t unique_two_regular_partition(const Multigraph& g);

// One vertex per cycle: plus cycles first, then minus cycles, each block
// ordered by smallest original vertex. One edge per matching edge.
Multigraph contracted_multigraph(const Multigraph& g, const SignPartition& p);

// Quotient matrix when the partition is equitable, nullopt otherwise.
// Throws NotAPartition when parts are empty, overlap, or miss a vertex.
std::optional<QuotientMatrix> check_equitable(const Multigraph& g,
                                              std::span<const VertexSet> parts);

struct BothSimpleCertificate {
  std::size_t mult_plus_one = 0;
  std::size_t mult_minus_one = 0;
  bool bipartite = false;
  // Filled only when both eigenvalues are simple.
  bool applicable = false;
  VertexSet w_pp, w_pm, w_mp, w_mm;  // V(+/-1 sign) intersect U(-1 eigvec sign)
  bool w_bipartition_verified = false;  // W++ u W-- vs W+- u W-+ is a bipartition
  bool w_sets_independent = false;
  std::optional<QuotientMatrix> w_quotient;  // when the four W-sets are equitable
};

// Throws NotCubic or Disconnected.
BothSimpleCertificate both_simple_certificate(const Multigraph& g);

}  // namespace cubicspec
