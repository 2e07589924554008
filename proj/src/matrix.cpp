#include "simcube/matrix.hpp"

#include <stdexcept>
#include <utility>

#include "simcube/errors.hpp"

namespace simcube {

namespace mp = boost::multiprecision;

RMatrix identity(std::size_t n) {
  RMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
  return m;
}

RMatrix multiply(const RMatrix& a, const RMatrix& b) {
  if (a.cols != b.rows) {
    throw std::invalid_argument("matrix shape mismatch in multiply");
  }
  RMatrix c(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i) {
    for (std::size_t k = 0; k < a.cols; ++k) {
      const Rational& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols; ++j) {
        c.at(i, j) += aik * b.at(k, j);
      }
    }
  }
  return c;
}

Rational det(const RMatrix& m) {
  if (!m.square()) {
    throw std::invalid_argument("determinant of non-square matrix");
  }
  const std::size_t n = m.rows;
  if (n == 0) return Rational(1);

  // Clear denominators row by row so elimination stays over the integers.
  std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
  BigInt scale = 1;  // product of row scale factors, always positive
  for (std::size_t i = 0; i < n; ++i) {
    BigInt row_lcm = 1;
    for (std::size_t j = 0; j < n; ++j) {
      row_lcm = mp::lcm(row_lcm, m.at(i, j).den());
    }
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& e = m.at(i, j);
      a[i][j] = e.num() * (row_lcm / e.den());
    }
    scale *= row_lcm;
  }

  // Bareiss: every division below is exact, intermediate entries are
  // minors of the integer matrix.
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t pivot = k + 1;
      while (pivot < n && a[pivot][k] == 0) ++pivot;
      if (pivot == n) return Rational(0);
      std::swap(a[k], a[pivot]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  BigInt result = a[n - 1][n - 1];
  if (sign < 0) result = -result;
  return Rational(std::move(result), std::move(scale));
}

RMatrix invert(const RMatrix& m) {
  if (!m.square()) {
    throw std::invalid_argument("inverse of non-square matrix");
  }
  const std::size_t n = m.rows;
  RMatrix work = m;
  RMatrix inv = identity(n);

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && work.at(pivot, col).is_zero()) ++pivot;
    if (pivot == n) {
      throw SingularMatrixError("matrix is singular");
    }
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(work.at(col, j), work.at(pivot, j));
        std::swap(inv.at(col, j), inv.at(pivot, j));
      }
    }
    const Rational p = work.at(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      work.at(col, j) /= p;
      inv.at(col, j) /= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col) continue;
      const Rational f = work.at(i, col);
      if (f.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        work.at(i, j) -= f * work.at(col, j);
        inv.at(i, j) -= f * inv.at(col, j);
      }
    }
  }
  return inv;
}

}  // namespace simcube
