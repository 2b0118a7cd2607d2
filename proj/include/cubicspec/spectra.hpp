#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "cubicspec/multigraph.hpp"

namespace cubicspec {

inline constexpr double kMatchTol = 1e-9;   // closed form vs numeric, elementwise
inline constexpr double kBucketTol = 1e-6;  // numeric eigenvalue counted as an integer

enum class SpectrumSource { ExactRank, ClosedForm, Numeric };

std::string_view source_name(SpectrumSource s) noexcept;

struct SpectrumReport {
  std::size_t n = 0;
  std::vector<Edge> edges;
  // (lambda, multiplicity) with multiplicity > 0, ascending lambda.
  std::vector<std::pair<long, std::size_t>> integer_eigs;
  std::vector<double> numeric_eigs;  // ascending
  SpectrumSource source = SpectrumSource::ExactRank;
};

// All eigenvalues of the adjacency matrix, ascending. Throws ConvergenceFailure
// if the solver fails or any residual |Av - lambda v| exceeds tol * n.
std::vector<double> numeric_spectrum(const Multigraph& g, double tol = kMatchTol);

// +-sqrt(4 cos(2 pi j/n) + 5), j = 0..n-1, sorted.
std::vector<double> f2n_closed_spectrum(std::size_t n);

// 2 cos(2 pi j/n) +- 1, sorted.
std::vector<double> prism_closed_spectrum(std::size_t n);

// Both roots of x^2 - (a_j + b_j) x + a_j b_j - 1 for each j, with
// a_j = 2cos(2 pi j/n), b_j = 2cos(2 pi jk/n). Pairs in j order (unsorted).
std::vector<std::pair<double, double>> gp_closed_root_pairs(std::size_t n, std::size_t k);
std::vector<double> gp_closed_spectrum(std::size_t n, std::size_t k);

// cos a + cos b +- sqrt((cos a - cos b)^2 + 1) over all (j, l) in Z_m^2, sorted.
std::vector<double> tm_closed_spectrum(std::size_t m);

// Spectrum of the truncation of a cubic graph with spectrum mu (n values):
// (1 +- sqrt(4 mu + 13)) / 2 per value, plus n/2 copies each of -2 and 0.
std::vector<double> truncation_closed_spectrum(std::span<const double> mu);

// Numeric spectrum plus exact multiplicities at every integer in [-D, D],
// D the maximum degree.
SpectrumReport spectrum_report(const Multigraph& g, double tol = kMatchTol);

// Largest elementwise gap between two sorted multisets of equal size;
// +infinity when sizes differ.
double max_abs_diff(std::span<const double> a, std::span<const double> b);

// Number of entries of xs within tol of x.
std::size_t count_near(std::span<const double> xs, double x, double tol = kBucketTol);

}  // namespace cubicspec
