#include <doctest.h>

#include <random>
#include <stdexcept>

#include "simcube/errors.hpp"
#include "simcube/matrix.hpp"
#include "test_helpers.hpp"

using simcube::det;
using simcube::identity;
using simcube::invert;
using simcube::multiply;
using simcube::Rational;
using simcube::RMatrix;
using namespace simcube::testing;

TEST_CASE("determinant of identity") {
  CHECK(det(identity(4)) == Rational(1));
  CHECK(det(identity(1)) == Rational(1));
}

TEST_CASE("determinant of the s1 node matrix") {
  // Expected value fixed by cofactor expansion (the oracle below).
  const RMatrix a = mat({{"0", "0", "0", "1"},
                         {"1", "1", "0", "1"},
                         {"1", "0", "1", "1"},
                         {"0", "1", "1", "1"}});
  CHECK(naive_det(a) == Rational(2));
  CHECK(det(a) == Rational(2));
}

TEST_CASE("determinant matches cofactor expansion on random matrices") {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 60; ++k) {
    const std::size_t n = 1 + rng() % 5;
    const RMatrix m = random_matrix(rng, n);
    CHECK(det(m) == naive_det(m));
  }
}

TEST_CASE("determinant is multiplicative") {
  std::mt19937_64 rng(8);
  for (int k = 0; k < 40; ++k) {
    const std::size_t n = 2 + rng() % 3;
    const RMatrix a = random_matrix(rng, n);
    const RMatrix b = random_matrix(rng, n);
    CHECK(det(multiply(a, b)) == det(a) * det(b));
  }
}

TEST_CASE("inverse is exact both ways") {
  std::mt19937_64 rng(9);
  int tested = 0;
  while (tested < 40) {
    const std::size_t n = 1 + rng() % 4;
    const RMatrix m = random_matrix(rng, n);
    if (det(m).is_zero()) continue;
    ++tested;
    const RMatrix inv = invert(m);
    CHECK(multiply(m, inv) == identity(n));
    CHECK(multiply(inv, m) == identity(n));
    CHECK(det(inv) == Rational(1) / det(m));
  }
}

TEST_CASE("inverse of identity") {
  CHECK(invert(identity(5)) == identity(5));
}

TEST_CASE("inverse of the s1 node matrix") {
  const RMatrix a = mat({{"0", "0", "0", "1"},
                         {"1", "1", "0", "1"},
                         {"1", "0", "1", "1"},
                         {"0", "1", "1", "1"}});
  const RMatrix expected = mat({{"-1/2", "1/2", "1/2", "-1/2"},
                                {"-1/2", "1/2", "-1/2", "1/2"},
                                {"-1/2", "-1/2", "1/2", "1/2"},
                                {"1", "0", "0", "0"}});
  CHECK(invert(a) == expected);
}

TEST_CASE("singular and malformed inputs") {
  RMatrix singular(2, 2);
  singular.at(0, 0) = Rational(1);
  singular.at(0, 1) = Rational(2);
  singular.at(1, 0) = Rational(2);
  singular.at(1, 1) = Rational(4);
  CHECK(det(singular) == Rational(0));
  CHECK_THROWS_AS(invert(singular), simcube::SingularMatrixError);

  RMatrix rect(2, 3);
  CHECK_THROWS_AS(det(rect), std::invalid_argument);
  CHECK_THROWS_AS(invert(rect), std::invalid_argument);
  CHECK_THROWS_AS(multiply(rect, rect), std::invalid_argument);
}

TEST_CASE("determinant needs no magnitude pivoting") {
  // Leading zeros force the first-nonzero pivot path.
  const RMatrix m = mat({{"0", "2", "1"},
                         {"0", "0", "3"},
                         {"5", "1", "0"}});
  CHECK(det(m) == naive_det(m));
  CHECK(det(m) == Rational(30));
}
