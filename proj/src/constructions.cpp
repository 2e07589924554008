#include "simcube/constructions.hpp"

#include <charconv>
#include <utility>

#include "simcube/errors.hpp"

namespace simcube {

bool is_hadamard(const HadamardMatrix& h) {
  const std::size_t m = h.order;
  if (h.entries.size() != m * m) return false;
  for (int8_t e : h.entries) {
    if (e != 1 && e != -1) return false;
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = i; k < m; ++k) {
      long long dot = 0;
      for (std::size_t j = 0; j < m; ++j) {
        dot += static_cast<long long>(h.entry(i, j)) * h.entry(k, j);
      }
      if (dot != (i == k ? static_cast<long long>(m) : 0)) return false;
    }
  }
  return true;
}

HadamardMatrix kronecker(const HadamardMatrix& a, const HadamardMatrix& b) {
  HadamardMatrix out;
  out.order = a.order * b.order;
  out.entries.resize(out.order * out.order);
  for (std::size_t i = 0; i < out.order; ++i) {
    for (std::size_t j = 0; j < out.order; ++j) {
      out.entries[i * out.order + j] = static_cast<int8_t>(
          a.entry(i / b.order, j / b.order) * b.entry(i % b.order, j % b.order));
    }
  }
  return out;
}

namespace {

bool is_prime(std::size_t q) {
  if (q < 2) return false;
  for (std::size_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) return false;
  }
  return true;
}

// Quadratic-residue (Paley) construction for prime q = 3 (mod 4), born
// normalized: border row and column are +1, the inner block holds
// -chi(i - j) off the diagonal and -1 on it.
HadamardMatrix paley(std::size_t q) {
  std::vector<int> chi(q, -1);
  for (std::size_t x = 1; x < q; ++x) {
    chi[(x * x) % q] = 1;
  }
  const std::size_t m = q + 1;
  HadamardMatrix h;
  h.order = m;
  h.entries.assign(m * m, 1);
  for (std::size_t i = 0; i < q; ++i) {
    for (std::size_t j = 0; j < q; ++j) {
      const int v = i == j ? -1 : -chi[(i + q - j) % q];
      h.entries[(i + 1) * m + (j + 1)] = static_cast<int8_t>(v);
    }
  }
  return h;
}

}  // namespace

HadamardMatrix hadamard(std::size_t m) {
  if (m == 1) {
    return HadamardMatrix{1, {1}};
  }
  if (m == 2) {
    return HadamardMatrix{2, {1, 1, 1, -1}};
  }
  if (m == 0 || m % 4 != 0) {
    throw UnsupportedOrderError("Hadamard order must be 1, 2 or a multiple of 4");
  }
  if (m % 2 == 0) {
    try {
      return kronecker(HadamardMatrix{2, {1, 1, 1, -1}}, hadamard(m / 2));
    } catch (const UnsupportedOrderError&) {
      // fall through to Paley
    }
  }
  if (m >= 4 && is_prime(m - 1) && (m - 1) % 4 == 3) {
    HadamardMatrix h = paley(m - 1);
    if (!is_hadamard(h)) {
      throw std::logic_error("Paley construction failed self-check");
    }
    return h;
  }
  throw UnsupportedOrderError("no supported Hadamard construction for order " +
                              std::to_string(m));
}

HadamardMatrix normalize_hadamard(HadamardMatrix h) {
  const std::size_t m = h.order;
  for (std::size_t j = 0; j < m; ++j) {
    if (h.entry(0, j) == -1) {
      for (std::size_t i = 0; i < m; ++i) h.entries[i * m + j] *= -1;
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (h.entry(i, 0) == -1) {
      for (std::size_t j = 0; j < m; ++j) h.entries[i * m + j] *= -1;
    }
  }
  return h;
}

Simplex regular_simplex(std::size_t n) {
  const HadamardMatrix h = normalize_hadamard(hadamard(n + 1));
  // Reversing each row moves the all-ones column to the last position, so
  // the node matrix of the [-1,1]^n simplex is the reversed matrix itself.
  std::vector<Point> vertices(n + 1, Point(n));
  const Rational half(1, 2);
  for (std::size_t j = 0; j <= n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      const int e = h.entry(j, n - i);  // reversed row, first n entries
      vertices[j][i] = (Rational(e) + Rational(1)) * half;
    }
  }
  return Simplex(std::move(vertices));
}

Simplex s_star(std::size_t n) {
  if (n < 2) {
    throw DomainError("corner simplex needs n >= 2");
  }
  std::vector<Point> vertices;
  vertices.reserve(n + 1);
  for (std::size_t j = 0; j < n; ++j) {
    Point v(n, Rational(1));
    v[j] = Rational(0);
    vertices.push_back(std::move(v));
  }
  vertices.emplace_back(n, Rational(0));
  return Simplex(std::move(vertices));
}

namespace {

Point pt(std::initializer_list<Rational> coords) { return Point(coords); }

const Rational kThird(1, 3);
const Rational kHalf(1, 2);

}  // namespace

Simplex named(NamedSimplex which) {
  switch (which) {
    case NamedSimplex::S1:
      return Simplex({pt({0, 0, 0}), pt({1, 1, 0}), pt({1, 0, 1}),
                      pt({0, 1, 1})});
    case NamedSimplex::S2:
      return Simplex({pt({kHalf, 0, 0}), pt({kHalf, 1, 0}),
                      pt({0, kHalf, 1}), pt({1, kHalf, 1})});
    case NamedSimplex::Perfect5:
      return family_simplex({FamilyParam::Tag::R, kHalf, kHalf});
  }
  throw std::invalid_argument("unknown named simplex");
}

bool FamilyParam::in_cube_range() const {
  const Rational zero(0), one(1);
  switch (tag) {
    case Tag::R: {
      const Rational lo(1, 3), hi(2, 3);
      return lo <= s && s <= hi && lo <= t && t <= hi;
    }
    case Tag::T:
    case Tag::S9:
      return zero <= t && t <= one;
  }
  return false;
}

Simplex family_simplex(const FamilyParam& p) {
  const Rational& s = p.s;
  const Rational& t = p.t;
  switch (p.tag) {
    case FamilyParam::Tag::R: {
      const Rational s2 = Rational(2) - Rational(3) * s;
      const Rational t2 = Rational(2) - Rational(3) * t;
      return Simplex({pt({s, 1, kThird, 1, 1}),
                      pt({s, 0, kThird, 1, 1}),
                      pt({s, t2, kThird, 0, 1}),
                      pt({s2, t, 0, kThird, 0}),
                      pt({0, t, 1, kThird, 0}),
                      pt({1, t, 1, kThird, 0})});
    }
    case FamilyParam::Tag::T: {
      const Rational u = Rational(1) - t;
      return Simplex({pt({1, 0, 0, 0, 0, 0, 1}),
                      pt({1, 0, 1, t, 1, 1, 0}),
                      pt({0, 1, 1, u, 0, 1, 1}),
                      pt({0, 0, 0, t, 1, 1, 0}),
                      pt({0, 1, 1, u, 0, 0, 0}),
                      pt({1, 1, 0, t, 1, 1, 0}),
                      pt({0, 1, 1, u, 1, 0, 1}),
                      pt({1, 0, 0, 1, 0, 0, 1})});
    }
    case FamilyParam::Tag::S9: {
      const Rational u = Rational(1) - t;
      return Simplex({pt({1, 0, 0, 0, 0, 0, 0, 0, 1}),
                      pt({1, 1, 0, 1, t, 1, 1, 0, 0}),
                      pt({1, 0, 1, 1, u, 0, 1, 1, 0}),
                      pt({0, 1, 1, 1, t, 0, 0, 1, 1}),
                      pt({0, 1, 1, 0, u, 1, 0, 0, 0}),
                      pt({0, 0, 0, 1, t, 0, 1, 1, 0}),
                      pt({1, 1, 0, 0, u, 1, 1, 1, 0}),
                      pt({0, 1, 1, 0, t, 1, 1, 0, 1}),
                      pt({0, 0, 1, 1, u, 1, 0, 1, 1}),
                      pt({1, 0, 0, 0, 1, 0, 0, 0, 1})});
    }
  }
  throw std::invalid_argument("unknown family tag");
}

ClosedForm closed_form(const FamilyParam& p) {
  if (!p.in_cube_range()) {
    throw DomainError("family parameter outside its cube-containment box");
  }
  const Rational& s = p.s;
  const Rational& t = p.t;
  switch (p.tag) {
    case FamilyParam::Tag::R: {
      const Rational three(3);
      Rational m = max(Rational(2, 3),
                       max(max(Rational(2) - three * s, three * s - Rational(1)),
                           max(Rational(2) - three * t, three * t - Rational(1))));
      Rational xi = Rational(6) * m + Rational(1);
      Rational alpha =
          (abs(Rational(1) - three * s) + abs(Rational(2) - three * s) +
           abs(Rational(4, 3) - three * s) + abs(Rational(5, 3) - three * s) +
           abs(Rational(1) - three * t) + abs(Rational(2) - three * t) +
           abs(Rational(4, 3) - three * t) + abs(Rational(5, 3) - three * t) +
           Rational(22, 3)) /
          Rational(2);
      return ClosedForm{std::move(xi), std::move(alpha), std::move(m)};
    }
    case FamilyParam::Tag::T: {
      ClosedForm cf;
      if (t < Rational(1, 4)) {
        cf.xi = Rational(10) - Rational(12) * t;
        cf.alpha = Rational(31, 4) - Rational(3) * t;
      } else if (t <= Rational(3, 4)) {
        cf.xi = Rational(7);
        cf.alpha = Rational(7);
      } else {
        cf.xi = Rational(12) * t - Rational(2);
        cf.alpha = Rational(3) * t + Rational(19, 4);
      }
      return cf;
    }
    case FamilyParam::Tag::S9: {
      ClosedForm cf;
      if (t < Rational(2, 5)) {
        cf.xi = Rational(25) - Rational(40) * t;
        cf.alpha = Rational(61, 5) - Rational(8) * t;
      } else if (t <= Rational(3, 5)) {
        cf.xi = Rational(9);
        cf.alpha = Rational(9);
      } else {
        cf.xi = Rational(40) * t - Rational(15);
        cf.alpha = Rational(8) * t + Rational(21, 5);
      }
      return cf;
    }
  }
  throw std::invalid_argument("unknown family tag");
}

namespace {

std::size_t parse_index(std::string_view text, std::string_view id) {
  std::size_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || text.empty()) {
    throw ParseError("bad dimension in builtin id \"" + std::string(id) + "\"");
  }
  return value;
}

}  // namespace

Simplex builtin_simplex(std::string_view id) {
  if (id == "s1") return named(NamedSimplex::S1);
  if (id == "s2") return named(NamedSimplex::S2);
  if (id == "perfect5") return named(NamedSimplex::Perfect5);

  auto split = [](std::string_view text) {
    std::vector<std::string_view> parts;
    while (true) {
      auto colon = text.find(':');
      parts.push_back(text.substr(0, colon));
      if (colon == std::string_view::npos) break;
      text.remove_prefix(colon + 1);
    }
    return parts;
  };
  const auto parts = split(id);
  try {
    if (parts.size() == 2 && parts[0] == "sstar") {
      return s_star(parse_index(parts[1], id));
    }
    if (parts.size() == 2 && parts[0] == "regular") {
      return regular_simplex(parse_index(parts[1], id));
    }
    if (parts.size() == 3 && parts[0] == "R") {
      return family_simplex({FamilyParam::Tag::R, Rational::parse(parts[1]),
                             Rational::parse(parts[2])});
    }
    if (parts.size() == 2 && parts[0] == "T") {
      return family_simplex(
          {FamilyParam::Tag::T, Rational(0), Rational::parse(parts[1])});
    }
    if (parts.size() == 2 && parts[0] == "S9") {
      return family_simplex(
          {FamilyParam::Tag::S9, Rational(0), Rational::parse(parts[1])});
    }
  } catch (const DomainError& e) {
    throw ParseError(std::string("builtin id \"") + std::string(id) +
                     "\": " + e.what());
  }
  throw ParseError("unknown builtin simplex id \"" + std::string(id) + "\"");
}

}  // namespace simcube
