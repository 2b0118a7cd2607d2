#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

#include "cubicspec/multigraph.hpp"

namespace cubicspec {

// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  mpz_class& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const mpz_class& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  static IntMatrix identity(std::size_t n);
  IntMatrix transpose() const;

  // this - lambda * I (square only).
  IntMatrix shifted(long lambda) const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpz_class> data_;
};

// Entries are kept in lowest terms with positive denominators (mpq_class
// canonical form).
using RationalVector = std::vector<mpq_class>;

IntMatrix adjacency_matrix(const Multigraph& g);

// Rank over Q via fraction-free (Bareiss) elimination. Pivots are the first
// nonzero entry found scanning columns left to right, rows top to bottom.
std::size_t integer_rank(const IntMatrix& m);

// dim ker(A - lambda I).
std::size_t eigen_multiplicity(const Multigraph& g, long lambda);

// Basis of ker(m) over Q, one vector per free column in increasing column
// order, each scaled so its first nonzero entry is 1.
std::vector<RationalVector> rational_nullspace(const IntMatrix& m);

// m * v computed exactly.
RationalVector multiply(const IntMatrix& m, const RationalVector& v);

}  // namespace cubicspec
