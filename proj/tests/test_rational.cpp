#include <doctest.h>

#include <random>

#include "simcube/errors.hpp"
#include "simcube/rational.hpp"
#include "test_helpers.hpp"

using simcube::BigInt;
using simcube::Rational;
using simcube::testing::random_rational;

TEST_CASE("parse literals") {
  CHECK(Rational::parse("1/3") == Rational(BigInt(1), BigInt(3)));
  CHECK(Rational::parse("5") == Rational(5));
  CHECK(Rational::parse("+7/3") == Rational(BigInt(7), BigInt(3)));
  CHECK(Rational::parse("0") == Rational());
  CHECK(Rational::parse("007") == Rational(7));
}

TEST_CASE("parse canonicalizes") {
  const Rational r = Rational::parse("-2/4");
  CHECK(r.num() == -1);
  CHECK(r.den() == 2);
  CHECK(Rational::parse("6/3") == Rational(2));
  CHECK(Rational::parse("-0/9") == Rational(0));
  CHECK(Rational::parse("-0/9").den() == 1);
}

TEST_CASE("parse rejects malformed text") {
  for (const char* bad : {"", "1/", "/3", "a", "1 /2", "1.5", "--2", "2/-3",
                          "1/2/3", "0x5", " 1", "1 "}) {
    CHECK_THROWS_AS(Rational::parse(bad), simcube::ParseError);
  }
  CHECK_THROWS_AS(Rational::parse("1/0"), simcube::ParseError);
}

TEST_CASE("text form round-trips") {
  CHECK(Rational::parse("-22/7").str() == "-22/7");
  CHECK(Rational(5).str() == "5");
  CHECK(Rational(BigInt(-4), BigInt(8)).str() == "-1/2");
  std::mt19937_64 rng(41);
  for (int k = 0; k < 200; ++k) {
    const Rational r = random_rational(rng, 1000, 999);
    CHECK(Rational::parse(r.str()) == r);
  }
}

TEST_CASE("arithmetic stays canonical") {
  std::mt19937_64 rng(42);
  auto canonical = [](const Rational& r) {
    if (r.den() <= 0) return false;
    if (r.num() == 0) return r.den() == 1;
    return boost::multiprecision::gcd(
               BigInt(boost::multiprecision::abs(r.num())), r.den()) == 1;
  };
  for (int k = 0; k < 100; ++k) {
    const Rational a = random_rational(rng);
    const Rational b = random_rational(rng);
    CHECK(canonical(a + b));
    CHECK(canonical(a - b));
    CHECK(canonical(a * b));
    if (!b.is_zero()) {
      CHECK(canonical(a / b));
      CHECK((a / b) * b == a);
    }
    CHECK(a + b == b + a);
    CHECK((a - b) + b == a);
  }
}

TEST_CASE("comparisons and helpers") {
  CHECK(Rational::parse("1/3") < Rational::parse("1/2"));
  CHECK(Rational::parse("-5") < Rational::parse("-1/9"));
  CHECK(simcube::abs(Rational::parse("-3/4")) == Rational::parse("3/4"));
  CHECK(simcube::max(Rational(2), Rational(3)) == Rational(3));
  CHECK(simcube::min(Rational(2), Rational(3)) == Rational(2));
  CHECK(Rational::parse("1/2").to_double() == doctest::Approx(0.5));
  CHECK(Rational::parse("-7").sign() == -1);
  CHECK(Rational().sign() == 0);
}

TEST_CASE("division by zero") {
  CHECK_THROWS_AS(Rational(1) / Rational(0), simcube::DomainError);
  CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), simcube::DomainError);
}
