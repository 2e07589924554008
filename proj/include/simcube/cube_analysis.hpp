#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "simcube/simplex.hpp"

namespace simcube {

// Per-facet maxima of -lambda_j over the cube vertices, with the full set
// of attaining vertices. Facet j is stored at index j-1; cube vertices are
// addressed by their binary-counting mask (bit i-1 = coordinate i).
struct ExtremalReport {
  std::vector<Rational> max_neg_lambda;
  std::vector<std::vector<std::uint32_t>> attaining;  // sorted masks

  Rational global_max() const;
};

// Verifiable summary of a simplex against the unit cube.
struct Certificate {
  Rational xi;
  Rational alpha;
  AxialDiameterReport diameters;
  bool circumscribed = false;
  bool perfect = false;
  // incidence[mask] = sorted 1-based facet indices of xi*S whose facet
  // contains that cube vertex; empty when the vertex is interior.
  std::vector<std::vector<std::size_t>> incidence;
  std::size_t incidence_count = 0;
};

ExtremalReport facet_maxima(const Simplex& s);

// Cube vertex -> facets of xi(S)*S containing it: the facets j whose
// -lambda_j(v) attains the global maximum.
std::vector<std::vector<std::size_t>> classify_vertices(const Simplex& s);

// Total number of (vertex, facet) incidences, counting repetitions.
std::size_t incidence_count(const Simplex& s);

// Requires every vertex coordinate in [0,1]; throws DomainError otherwise.
// When xi_n is known for the dimension, perfect means xi == xi_n and every
// cube vertex touches a facet of xi*S; without it, xi == n is the
// sufficient condition used.
Certificate certify(const Simplex& s, const std::optional<Rational>& xi_n);

// When S lies in the cube and xi(S) <= n, the centroid must be the cube
// center; returns that equality, or vacuous true if the hypothesis fails.
bool check_centroid_theorem(const Simplex& s);

bool inside_unit_cube(const Simplex& s);

}  // namespace simcube
