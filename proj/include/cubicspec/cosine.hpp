#pragma once

#include <cstddef>
#include <set>
#include <utility>

namespace cubicspec {

inline constexpr double kCosineTol = 1e-9;

// Pairs (j, l) in Z_m^2 with cos(2 pi j/m) + cos(2 pi l/m) = 2 cos(2 pi j/m) cos(2 pi l/m).
struct CosineSolutionSet {
  std::size_t m = 0;
  std::set<std::pair<std::size_t, std::size_t>> solutions;
  bool trivial_included = false;

  std::size_t nontrivial_count() const { return solutions.size() - (trivial_included ? 1 : 0); }
  friend bool operator==(const CosineSolutionSet&, const CosineSolutionSet&) = default;
};

// |cos x + cos y - 2 cos x cos y| at x = 2 pi j/m, y = 2 pi l/m.
double cosine_residual(std::size_t j, std::size_t l, std::size_t m);

// Direct enumeration of all m^2 pairs.
CosineSolutionSet roots1_solutions(std::size_t m, double tol = kCosineTol);

// Closed-form answer: the trivial pair, plus {(a,a),(a,3a),(3a,a),(3a,3a)} when
// m = 4a, plus {a,4a}x{2a,3a} and {2a,3a}x{a,4a} when m = 5a.
CosineSolutionSet predicted_solutions(std::size_t m);

// Number of j in Z_n with cos t + cos kt = 2 cos t cos kt, t = 2 pi j/n.
std::size_t gp_one_multiplicity(std::size_t n, std::size_t k, double tol = kCosineTol);

// Smallest residual over all m <= m_max and all pairs outside
// predicted_solutions(m).
double near_miss_scan(std::size_t m_max);

}  // namespace cubicspec
