#include "simcube/simplex.hpp"

#include <stdexcept>
#include <utility>

#include "simcube/errors.hpp"

namespace simcube {

Simplex::Simplex(std::vector<Point> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty() || vertices_.front().empty()) {
    throw std::invalid_argument("simplex needs at least one 1-D vertex");
  }
  n_ = vertices_.front().size();
  if (vertices_.size() != n_ + 1) {
    throw std::invalid_argument("simplex in R^n needs exactly n+1 vertices");
  }
  for (const Point& v : vertices_) {
    if (v.size() != n_) {
      throw std::invalid_argument("simplex vertices differ in dimension");
    }
  }
  if (det(node_matrix(*this)).is_zero()) {
    throw DegenerateSimplexError("degenerate simplex: node matrix is singular");
  }
}

RMatrix node_matrix(const Simplex& s) {
  const std::size_t n = s.dim();
  RMatrix a(n + 1, n + 1);
  for (std::size_t j = 0; j <= n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      a.at(j, i) = s.vertex(j)[i];
    }
    a.at(j, n) = Rational(1);
  }
  return a;
}

Rational volume(const Simplex& s) {
  BigInt factorial = 1;
  for (std::size_t k = 2; k <= s.dim(); ++k) factorial *= k;
  return abs(det(node_matrix(s))) / Rational(factorial);
}

LagrangeBasis lagrange_basis(const Simplex& s) {
  return LagrangeBasis{s, invert(node_matrix(s))};
}

Rational eval_lambda(const LagrangeBasis& b, std::size_t j, const Point& x) {
  const std::size_t n = b.dim();
  if (j < 1 || j > n + 1) {
    throw std::out_of_range("facet index out of range");
  }
  if (x.size() != n) {
    throw std::invalid_argument("point dimension mismatch");
  }
  Rational value = b.coeffs.at(n, j - 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (!x[i].is_zero()) value += b.coeffs.at(i, j - 1) * x[i];
  }
  return value;
}

Rational eval_lambda_at_cube_vertex(const LagrangeBasis& b, std::size_t j,
                                    std::uint32_t mask) {
  const std::size_t n = b.dim();
  if (j < 1 || j > n + 1) {
    throw std::out_of_range("facet index out of range");
  }
  Rational value = b.coeffs.at(n, j - 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (mask & (std::uint32_t{1} << i)) value += b.coeffs.at(i, j - 1);
  }
  return value;
}

Point cube_vertex(std::size_t n, std::uint32_t mask) {
  Point v(n);
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = Rational((mask >> i) & 1u);
  }
  return v;
}

AxialDiameterReport axial_diameters(const LagrangeBasis& b) {
  const std::size_t n = b.dim();
  AxialDiameterReport report;
  report.axes.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Rational abs_sum;
    for (std::size_t j = 0; j <= n; ++j) {
      abs_sum += abs(b.coeffs.at(i, j));
    }
    // abs_sum > 0: a zero row of the inverse node matrix cannot happen
    // for a nondegenerate simplex.
    AxialDiameter axis;
    axis.length = Rational(2) / abs_sum;
    axis.weights.reserve(n + 1);
    Point center(n);
    for (std::size_t j = 0; j <= n; ++j) {
      Rational w = abs(b.coeffs.at(i, j)) / abs_sum;
      if (!w.is_zero()) {
        const Point& vtx = b.simplex.vertex(j);
        for (std::size_t c = 0; c < n; ++c) center[c] += w * vtx[c];
      }
      axis.weights.push_back(std::move(w));
    }
    axis.center = std::move(center);
    report.axes.push_back(std::move(axis));
  }
  return report;
}

Rational alpha_cube(const LagrangeBasis& b) {
  const std::size_t n = b.dim();
  // Route 1: half the absolute sum of the coefficient rows.
  Rational half_abs_sum;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= n; ++j) {
      half_abs_sum += abs(b.coeffs.at(i, j));
    }
  }
  half_abs_sum /= Rational(2);
  // Route 2: sum of reciprocal axial diameters.
  Rational recip_sum;
  for (const AxialDiameter& axis : axial_diameters(b).axes) {
    recip_sum += Rational(1) / axis.length;
  }
  if (half_abs_sum != recip_sum) {
    throw std::logic_error("alpha routes disagree; arithmetic bug");
  }
  return half_abs_sum;
}

Rational xi_polytope(const Simplex& s, const std::vector<Point>& c_vertices) {
  if (c_vertices.empty()) {
    throw std::invalid_argument("polytope needs at least one vertex");
  }
  const std::size_t n = s.dim();
  for (const Point& v : c_vertices) {
    if (v.size() != n) {
      throw std::invalid_argument("polytope vertex dimension mismatch");
    }
  }
  LagrangeBasis b = lagrange_basis(s);
  Rational best = -eval_lambda(b, 1, c_vertices.front());
  for (std::size_t j = 1; j <= n + 1; ++j) {
    for (const Point& v : c_vertices) {
      best = max(best, -eval_lambda(b, j, v));
    }
  }
  Rational sigma = Rational(static_cast<long long>(n) + 1) * best + Rational(1);
  // The max formula assumes the polytope is not already inside S; the
  // homothety ratio is 1 in that case.
  return max(sigma, Rational(1));
}

Rational xi_cube(const LagrangeBasis& b) {
  const std::size_t n = b.dim();
  const std::uint32_t count = std::uint32_t{1} << n;
  Rational best = -eval_lambda_at_cube_vertex(b, 1, 0);
  for (std::size_t j = 1; j <= n + 1; ++j) {
    for (std::uint32_t mask = 0; mask < count; ++mask) {
      best = max(best, -eval_lambda_at_cube_vertex(b, j, mask));
    }
  }
  Rational sigma = Rational(static_cast<long long>(n) + 1) * best + Rational(1);
  return max(sigma, Rational(1));
}

Rational xi_cube(const Simplex& s) { return xi_cube(lagrange_basis(s)); }

Point centroid(const Simplex& s) {
  const std::size_t n = s.dim();
  Point c(n);
  for (const Point& v : s.vertices()) {
    for (std::size_t i = 0; i < n; ++i) c[i] += v[i];
  }
  const Rational count(static_cast<long long>(n) + 1);
  for (std::size_t i = 0; i < n; ++i) c[i] /= count;
  return c;
}

}  // namespace simcube
