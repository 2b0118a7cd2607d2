#include "cubicspec/cosine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "cubicspec/error.hpp"

namespace cubicspec {

namespace {

std::vector<double> cos_table(std::size_t m) {
  std::vector<double> c(m);
  for (std::size_t j = 0; j < m; ++j) {
    c[j] = std::cos(2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(m));
  }
  return c;
}

double residual(double a, double b) { return std::abs(a + b - 2.0 * a * b); }

}  // namespace

double cosine_residual(std::size_t j, std::size_t l, std::size_t m) {
  const double x = 2.0 * std::numbers::pi * static_cast<double>(j % m) / static_cast<double>(m);
  const double y = 2.0 * std::numbers::pi * static_cast<double>(l % m) / static_cast<double>(m);
  return residual(std::cos(x), std::cos(y));
}

CosineSolutionSet roots1_solutions(std::size_t m, double tol) {
  if (m < 1) fail(ErrorKind::TooSmall, "roots1_solutions requires m >= 1");
  const auto c = cos_table(m);
  CosineSolutionSet out;
  out.m = m;
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t l = 0; l < m; ++l) {
      if (residual(c[j], c[l]) <= tol) out.solutions.emplace(j, l);
    }
  }
  out.trivial_included = out.solutions.contains({0, 0});
  return out;
}

CosineSolutionSet predicted_solutions(std::size_t m) {
  if (m < 1) fail(ErrorKind::TooSmall, "predicted_solutions requires m >= 1");
  CosineSolutionSet out;
  out.m = m;
  out.solutions.emplace(0, 0);
  out.trivial_included = true;
  if (m % 4 == 0) {
    const std::size_t a = m / 4;
    for (std::size_t j : {a, 3 * a}) {
      for (std::size_t l : {a, 3 * a}) out.solutions.emplace(j, l);
    }
  }
  if (m % 5 == 0) {
    const std::size_t a = m / 5;
    for (std::size_t j : {a, 4 * a}) {
      for (std::size_t l : {2 * a, 3 * a}) {
        out.solutions.emplace(j, l);
        out.solutions.emplace(l, j);
      }
    }
  }
  return out;
}

std::size_t gp_one_multiplicity(std::size_t n, std::size_t k, double tol) {
  if (n < 1) fail(ErrorKind::TooSmall, "gp_one_multiplicity requires n >= 1");
  const auto c = cos_table(n);
  std::size_t count = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (residual(c[j], c[(j * k) % n]) <= tol) ++count;
  }
  return count;
}

double near_miss_scan(std::size_t m_max) {
  if (m_max < 2) fail(ErrorKind::TooSmall, "near_miss_scan requires m_max >= 2");
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t m = 1; m <= m_max; ++m) {
    const auto c = cos_table(m);
    const auto predicted = predicted_solutions(m);
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t l = 0; l < m; ++l) {
        if (predicted.solutions.contains({j, l})) continue;
        best = std::min(best, residual(c[j], c[l]));
      }
    }
  }
  return best;
}

}  // namespace cubicspec
