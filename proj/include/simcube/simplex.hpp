#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "simcube/matrix.hpp"
#include "simcube/rational.hpp"

namespace simcube {

using Point = std::vector<Rational>;

// Nondegenerate simplex in R^n: n+1 vertices of n exact coordinates each.
// Vertex order is semantically significant (facet j is opposite vertex j);
// it is preserved exactly as given.
class Simplex {
public:
  // Throws std::invalid_argument on a malformed vertex list and
  // DegenerateSimplexError when the node matrix is singular.
  explicit Simplex(std::vector<Point> vertices);

  std::size_t dim() const { return n_; }
  std::size_t vertex_count() const { return n_ + 1; }
  const std::vector<Point>& vertices() const { return vertices_; }
  // j is 0-based here; facet indices in reports are 1-based (facet j+1
  // is opposite vertex index j).
  const Point& vertex(std::size_t j) const { return vertices_[j]; }

  friend bool operator==(const Simplex& a, const Simplex& b) {
    return a.vertices_ == b.vertices_;
  }

private:
  std::size_t n_;
  std::vector<Point> vertices_;
};

// Coefficient table of the degree-<=1 barycentric coordinate functions
// lambda_j: column j holds the n linear coefficients of lambda_j followed
// by its constant term. Computed as the inverse of the node matrix.
struct LagrangeBasis {
  Simplex simplex;
  RMatrix coeffs;  // (n+1) x (n+1)

  std::size_t dim() const { return simplex.dim(); }
};

struct AxialDiameter {
  Rational length;               // d_i
  Point center;                  // midpoint y^(i) of the longest segment
  std::vector<Rational> weights; // m_{ij}, convex weights over vertices
};

struct AxialDiameterReport {
  std::vector<AxialDiameter> axes;  // index i-1 holds axis i
};

// (n+1)x(n+1) matrix whose row j is vertex j's coordinates followed by 1.
RMatrix node_matrix(const Simplex& s);

// |det(node matrix)| / n!
Rational volume(const Simplex& s);

LagrangeBasis lagrange_basis(const Simplex& s);

// Value of lambda_j at x; j is 1-based, 1 <= j <= n+1.
Rational eval_lambda(const LagrangeBasis& b, std::size_t j, const Point& x);

// lambda_j at the cube vertex whose 0/1 coordinates are the bits of mask
// (bit i-1 of mask is coordinate i).
Rational eval_lambda_at_cube_vertex(const LagrangeBasis& b, std::size_t j,
                                    std::uint32_t mask);

Point cube_vertex(std::size_t n, std::uint32_t mask);

// Longest axis-parallel segments: d_i = 2 / sum_j |l_ij| with midpoint
// sum_j m_ij x^(j), m_ij = |l_ij| / sum_k |l_ik|.
AxialDiameterReport axial_diameters(const LagrangeBasis& b);

// Minimal sigma > 0 with the unit cube inside a translate of sigma*S.
// Evaluated both as sum_i 1/d_i and as half the absolute coefficient sum;
// the two routes must agree exactly.
Rational alpha_cube(const LagrangeBasis& b);

// Minimal sigma >= 1 such that the convex hull of c_vertices lies in the
// homothet sigma*S (center of homothety at the centroid of S):
// max(1, (n+1) * max_{k,v} (-lambda_k(v)) + 1).
Rational xi_polytope(const Simplex& s, const std::vector<Point>& c_vertices);

// xi against the unit cube: the maximum above runs over all 2^n vertices.
Rational xi_cube(const Simplex& s);
Rational xi_cube(const LagrangeBasis& b);

Point centroid(const Simplex& s);

}  // namespace simcube
