#pragma once

#include <cstddef>
#include <vector>

#include "simcube/rational.hpp"

namespace simcube {

// Dense matrix of exact rationals, row-major. Sized for the (n+1)x(n+1)
// node matrices this library works with; no sparsity or blocking.
struct RMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Rational> entries;

  RMatrix() = default;
  RMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c) {}

  Rational& at(std::size_t i, std::size_t j) { return entries[i * cols + j]; }
  const Rational& at(std::size_t i, std::size_t j) const {
    return entries[i * cols + j];
  }

  bool square() const { return rows == cols; }

  friend bool operator==(const RMatrix& a, const RMatrix& b) {
    return a.rows == b.rows && a.cols == b.cols && a.entries == b.entries;
  }
};

RMatrix identity(std::size_t n);
RMatrix multiply(const RMatrix& a, const RMatrix& b);

// Exact determinant by fraction-free (Bareiss) elimination on the
// denominator-cleared integer matrix. Throws std::invalid_argument on
// non-square input.
Rational det(const RMatrix& m);

// Exact inverse by Gauss-Jordan elimination, pivoting on the first
// nonzero entry of each column. Throws SingularMatrixError.
RMatrix invert(const RMatrix& m);

}  // namespace simcube
