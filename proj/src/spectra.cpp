#include "cubicspec/spectra.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "cubicspec/error.hpp"
#include "cubicspec/exact_linalg.hpp"

namespace cubicspec {

namespace {

double cos_frac(std::size_t num, std::size_t den) {
  // cos(2 pi num/den) with the argument reduced first, so exact angles such as
  // pi/2 land as close to their true value as double allows.
  const std::size_t r = num % den;
  return std::cos(2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(den));
}

std::vector<double> sorted(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

std::string_view source_name(SpectrumSource s) noexcept {
  switch (s) {
    case SpectrumSource::ExactRank: return "exact-rank";
    case SpectrumSource::ClosedForm: return "closed-form";
    case SpectrumSource::Numeric: return "numeric";
  }
  return "unknown";
}

std::vector<double> numeric_spectrum(const Multigraph& g, double tol) {
  const auto n = static_cast<Eigen::Index>(g.vertex_count());
  if (n == 0) return {};
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (auto [u, v] : g.edges()) {
    a(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(v)) += 1.0;
    a(static_cast<Eigen::Index>(v), static_cast<Eigen::Index>(u)) += 1.0;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
  if (solver.info() != Eigen::Success) {
    fail(ErrorKind::ConvergenceFailure, "symmetric eigensolver did not converge");
  }
  const auto& vals = solver.eigenvalues();
  const auto& vecs = solver.eigenvectors();
  const double bound = tol * static_cast<double>(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double residual = (a * vecs.col(i) - vals(i) * vecs.col(i)).norm();
    if (!(residual <= bound)) {
      fail(ErrorKind::ConvergenceFailure,
           "eigenpair residual " + std::to_string(residual) + " exceeds " + std::to_string(bound));
    }
  }
  std::vector<double> out(vals.data(), vals.data() + n);
  return sorted(std::move(out));
}

std::vector<double> f2n_closed_spectrum(std::size_t n) {
  if (n < 2) fail(ErrorKind::TooSmall, "f2n spectrum requires n >= 2");
  std::vector<double> out;
  for (std::size_t j = 0; j < n; ++j) {
    const double r = std::sqrt(std::max(0.0, 4.0 * cos_frac(j, n) + 5.0));
    out.push_back(r);
    out.push_back(-r);
  }
  return sorted(std::move(out));
}

std::vector<double> prism_closed_spectrum(std::size_t n) {
  if (n < 3) fail(ErrorKind::TooSmall, "prism spectrum requires n >= 3");
  std::vector<double> out;
  for (std::size_t j = 0; j < n; ++j) {
    const double c = 2.0 * cos_frac(j, n);
    out.push_back(c + 1.0);
    out.push_back(c - 1.0);
  }
  return sorted(std::move(out));
}

std::vector<std::pair<double, double>> gp_closed_root_pairs(std::size_t n, std::size_t k) {
  std::vector<std::pair<double, double>> out;
  for (std::size_t j = 0; j < n; ++j) {
    const double a = 2.0 * cos_frac(j, n);
    const double b = 2.0 * cos_frac(j * k, n);
    // Discriminant (a - b)^2 + 4 is always positive: two distinct real roots.
    const double root = std::sqrt((a - b) * (a - b) + 4.0);
    out.emplace_back((a + b + root) / 2.0, (a + b - root) / 2.0);
  }
  return out;
}

std::vector<double> gp_closed_spectrum(std::size_t n, std::size_t k) {
  std::vector<double> out;
  for (auto [x1, x2] : gp_closed_root_pairs(n, k)) {
    out.push_back(x1);
    out.push_back(x2);
  }
  return sorted(std::move(out));
}

std::vector<double> tm_closed_spectrum(std::size_t m) {
  if (m < 3) fail(ErrorKind::TooSmall, "t_m spectrum requires m >= 3");
  std::vector<double> out;
  out.reserve(2 * m * m);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t l = 0; l < m; ++l) {
      const double a = cos_frac(j, m);
      const double b = cos_frac(l, m);
      const double root = std::sqrt((a - b) * (a - b) + 1.0);
      out.push_back(a + b + root);
      out.push_back(a + b - root);
    }
  }
  return sorted(std::move(out));
}

std::vector<double> truncation_closed_spectrum(std::span<const double> mu) {
  const std::size_t n = mu.size();
  if (n % 2 != 0) {
    fail(ErrorKind::BadMultiplicity, "truncation spectrum needs an even number of eigenvalues");
  }
  std::vector<double> out;
  out.reserve(3 * n);
  for (double m : mu) {
    if (m < -3.0 - 1e-9 || m > 3.0 + 1e-9) {
      fail(ErrorKind::OutOfRange, "cubic eigenvalue outside [-3, 3]: " + std::to_string(m));
    }
    const double root = std::sqrt(std::max(0.0, 4.0 * m + 13.0));
    out.push_back((1.0 + root) / 2.0);
    out.push_back((1.0 - root) / 2.0);
  }
  for (std::size_t i = 0; i < n / 2; ++i) {
    out.push_back(-2.0);
    out.push_back(0.0);
  }
  return sorted(std::move(out));
}

SpectrumReport spectrum_report(const Multigraph& g, double tol) {
  SpectrumReport r;
  r.n = g.vertex_count();
  r.edges = g.edges();
  r.numeric_eigs = numeric_spectrum(g, tol);
  r.source = SpectrumSource::ExactRank;
  if (r.n == 0) return r;
  const long d = static_cast<long>(max_degree(g));
  const IntMatrix a = adjacency_matrix(g);
  for (long lambda = -d; lambda <= d; ++lambda) {
    const std::size_t mult = r.n - integer_rank(a.shifted(lambda));
    if (mult > 0) r.integer_eigs.emplace_back(lambda, mult);
  }
  return r;
}

double max_abs_diff(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

std::size_t count_near(std::span<const double> xs, double x, double tol) {
  return static_cast<std::size_t>(
      std::count_if(xs.begin(), xs.end(), [&](double y) { return std::abs(y - x) <= tol; }));
}

}  // namespace cubicspec
