#include "cubicspec/exact_linalg.hpp"

#include <utility>

#include "cubicspec/error.hpp"

namespace cubicspec {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

IntMatrix IntMatrix::shifted(long lambda) const {
  if (rows_ != cols_) fail(ErrorKind::InvalidArgument, "shift of a non-square matrix");
  IntMatrix out = *this;
  for (std::size_t i = 0; i < rows_; ++i) out(i, i) -= lambda;
  return out;
}

IntMatrix adjacency_matrix(const Multigraph& g) {
  const std::size_t n = g.vertex_count();
  IntMatrix a(n, n);
  for (auto [u, v] : g.edges()) {
    a(u, v) += 1;
    a(v, u) += 1;
  }
  return a;
}

namespace {

struct Echelon {
  IntMatrix m;                          // fraction-free row echelon form
  std::vector<std::size_t> pivot_cols;  // pivot column of row i
};

Echelon bareiss_echelon(IntMatrix m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  Echelon out;
  mpz_class prev = 1;
  mpz_class tmp;
  std::size_t prow = 0;
  for (std::size_t c = 0; c < cols && prow < rows; ++c) {
    std::size_t r = prow;
    while (r < rows && m(r, c) == 0) ++r;
    if (r == rows) continue;
    if (r != prow) {
      for (std::size_t j = c; j < cols; ++j) std::swap(m(r, j), m(prow, j));
    }
    const mpz_class& piv = m(prow, c);
    for (std::size_t i = prow + 1; i < rows; ++i) {
      const bool lead_zero = m(i, c) == 0;
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_class& x = m(i, j);
        if (lead_zero) {
          if (x == 0) continue;
          mpz_mul(x.get_mpz_t(), x.get_mpz_t(), piv.get_mpz_t());
        } else {
          mpz_mul(tmp.get_mpz_t(), m(i, c).get_mpz_t(), m(prow, j).get_mpz_t());
          mpz_mul(x.get_mpz_t(), x.get_mpz_t(), piv.get_mpz_t());
          mpz_sub(x.get_mpz_t(), x.get_mpz_t(), tmp.get_mpz_t());
        }
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, c) = 0;
    }
    prev = piv;
    out.pivot_cols.push_back(c);
    ++prow;
  }
  out.m = std::move(m);
  return out;
}

}  // namespace

std::size_t integer_rank(const IntMatrix& m) { return bareiss_echelon(m).pivot_cols.size(); }

std::size_t eigen_multiplicity(const Multigraph& g, long lambda) {
  return g.vertex_count() - integer_rank(adjacency_matrix(g).shifted(lambda));
}

std::vector<RationalVector> rational_nullspace(const IntMatrix& m) {
  const Echelon e = bareiss_echelon(m);
  const std::size_t cols = m.cols();
  const std::size_t rank = e.pivot_cols.size();
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : e.pivot_cols) is_pivot[c] = true;

  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RationalVector x(cols, mpq_class(0));
    x[free] = 1;
    for (std::size_t i = rank; i-- > 0;) {
      const std::size_t p = e.pivot_cols[i];
      mpq_class acc = 0;
      for (std::size_t j = p + 1; j < cols; ++j) {
        if (e.m(i, j) != 0 && x[j] != 0) acc += mpq_class(e.m(i, j)) * x[j];
      }
      x[p] = -acc / mpq_class(e.m(i, p));
    }
    for (const auto& v : x) {
      if (v != 0) {
        const mpq_class lead = v;
        for (auto& y : x) y /= lead;
        break;
      }
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

RationalVector multiply(const IntMatrix& m, const RationalVector& v) {
  if (v.size() != m.cols()) fail(ErrorKind::InvalidArgument, "dimension mismatch in multiply");
  RationalVector out(m.rows(), mpq_class(0));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m(r, c) != 0) out[r] += mpq_class(m(r, c)) * v[c];
    }
  }
  return out;
}

}  // namespace cubicspec
