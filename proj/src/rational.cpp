#include "simcube/rational.hpp"

#include <cctype>
#include <ostream>
#include <utility>

#include "simcube/errors.hpp"

namespace simcube {

namespace mp = boost::multiprecision;

Rational::Rational(BigInt num, BigInt den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) {
    throw DomainError("rational with zero denominator");
  }
  canonicalize();
}

void Rational::canonicalize() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  BigInt g = mp::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

BigInt digits_to_bigint(std::string_view s) {
  return BigInt(std::string(s));
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  auto slash = s.find('/');
  std::string_view num_part = s.substr(0, slash);
  if (!all_digits(num_part)) {
    throw ParseError("malformed rational: \"" + std::string(text) + "\"");
  }
  BigInt num = digits_to_bigint(num_part);
  BigInt den = 1;
  if (slash != std::string_view::npos) {
    std::string_view den_part = s.substr(slash + 1);
    if (!all_digits(den_part)) {
      throw ParseError("malformed rational: \"" + std::string(text) + "\"");
    }
    den = digits_to_bigint(den_part);
    if (den == 0) {
      throw ParseError("zero denominator: \"" + std::string(text) + "\"");
    }
  }
  if (negative) num = -num;
  return Rational(std::move(num), std::move(den));
}

std::string Rational::str() const {
  std::string out = num_.str();
  if (den_ != 1) {
    out += '/';
    out += den_.str();
  }
  return out;
}

double Rational::to_double() const {
  return num_.convert_to<double>() / den_.convert_to<double>();
}

Rational& Rational::operator+=(const Rational& o) {
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ *= o.den_;
  canonicalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  num_ = num_ * o.den_ - o.num_ * den_;
  den_ *= o.den_;
  canonicalize();
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  canonicalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) {
    throw DomainError("division by zero rational");
  }
  num_ *= o.den_;
  den_ *= o.num_;
  canonicalize();
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }

Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace simcube
