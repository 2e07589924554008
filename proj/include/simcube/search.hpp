#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "simcube/cube_analysis.hpp"
#include "simcube/simplex.hpp"

namespace simcube {

// Randomized coordinate-descent over simplices whose vertex coordinates
// lie on the grid {0, 1/D, ..., 1} inside the unit cube, minimizing xi.
// Screening uses doubles; every accepted move and the final answer are
// confirmed in exact arithmetic.
struct SearchConfig {
  std::size_t n = 0;
  unsigned grid_denominator = 1;
  std::size_t restarts = 1;
  std::size_t max_steps = 100;
  std::uint64_t seed = 0;
  // Restrict moves to those keeping the vertex-coordinate sums at
  // (n+1)/2, the necessary condition for xi(S) = n candidates.
  bool centroid_lock = false;
};

struct SearchResult {
  Simplex best;
  double xi_float = 0.0;
  Rational xi_exact;
  // Exact xi after each accepted improvement of the winning restart,
  // starting with its initial simplex at step 0.
  std::vector<std::pair<std::size_t, Rational>> trace;
};

// Uniform nondegenerate simplex on the grid; resamples on degeneracy and
// throws DomainError when the grid cannot produce one within the retry
// budget.
Simplex random_simplex(std::size_t n, unsigned grid_denominator,
                       std::uint64_t seed);

// Best-of-restarts first-improvement descent; deterministic for a given
// config (restart r draws from a stream derived from (seed, r)). Ties
// between restarts go to the lexicographically smaller vertex matrix.
SearchResult local_search(const SearchConfig& cfg);

// Exact certificate for a float-screened candidate.
Certificate confirm(const Simplex& s);

}  // namespace simcube
