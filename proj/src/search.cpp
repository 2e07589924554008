#include "simcube/search.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <utility>

#include "simcube/errors.hpp"

namespace simcube {

namespace {

// Grid simplex: integer coordinates in [0, D], vertex j at row j.
using Grid = std::vector<std::vector<int>>;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// rng() % k is implementation-independent, unlike uniform_int_distribution.
int draw(std::mt19937_64& rng, int k) {
  return static_cast<int>(rng() % static_cast<std::uint64_t>(k));
}

Simplex grid_to_simplex(const Grid& g, unsigned denom) {
  std::vector<Point> vertices;
  vertices.reserve(g.size());
  for (const auto& row : g) {
    Point v;
    v.reserve(row.size());
    for (int coord : row) {
      v.emplace_back(BigInt(coord), BigInt(denom));
    }
    vertices.push_back(std::move(v));
  }
  return Simplex(std::move(vertices));
}

bool grid_nondegenerate(const Grid& g) {
  // Integer determinant test of the node matrix in grid units; scaling
  // columns by 1/D does not change singularity.
  const std::size_t m = g.size();
  std::vector<std::vector<BigInt>> a(m, std::vector<BigInt>(m));
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i + 1 < m; ++i) a[j][i] = g[j][i];
    a[j][m - 1] = 1;
  }
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < m; ++k) {
    if (a[k][k] == 0) {
      std::size_t pivot = k + 1;
      while (pivot < m && a[pivot][k] == 0) ++pivot;
      if (pivot == m) return false;
      std::swap(a[k], a[pivot]);
    }
    for (std::size_t i = k + 1; i < m; ++i) {
      for (std::size_t j = k + 1; j < m; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return a[m - 1][m - 1] != 0;
}

constexpr double kInf = std::numeric_limits<double>::infinity();

// Double-precision xi of a grid simplex; +inf when numerically singular.
double xi_float_of(const Grid& g, std::size_t n, unsigned denom) {
  const std::size_t m = n + 1;
  std::vector<std::vector<double>> work(m, std::vector<double>(m));
  std::vector<std::vector<double>> inv(m, std::vector<double>(m, 0.0));
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      work[j][i] = static_cast<double>(g[j][i]) / denom;
    }
    work[j][n] = 1.0;
    inv[j][j] = 1.0;
  }
  for (std::size_t col = 0; col < m; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < m; ++r) {
      if (std::abs(work[r][col]) > std::abs(work[pivot][col])) pivot = r;
    }
    if (std::abs(work[pivot][col]) < 1e-10) return kInf;
    std::swap(work[col], work[pivot]);
    std::swap(inv[col], inv[pivot]);
    const double p = work[col][col];
    for (std::size_t j = 0; j < m; ++j) {
      work[col][j] /= p;
      inv[col][j] /= p;
    }
    for (std::size_t r = 0; r < m; ++r) {
      if (r == col) continue;
      const double f = work[r][col];
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < m; ++j) {
        work[r][j] -= f * work[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  double best = -kInf;
  const std::uint32_t count = std::uint32_t{1} << n;
  for (std::size_t j = 0; j < m; ++j) {
    for (std::uint32_t mask = 0; mask < count; ++mask) {
      double lambda = inv[n][j];
      for (std::size_t i = 0; i < n; ++i) {
        if (mask & (std::uint32_t{1} << i)) lambda += inv[i][j];
      }
      if (-lambda > best) best = -lambda;
    }
  }
  return std::max(1.0, static_cast<double>(m) * best + 1.0);
}

Grid sample_grid(std::mt19937_64& rng, std::size_t n, unsigned denom) {
  Grid g(n + 1, std::vector<int>(n));
  for (auto& row : g) {
    for (int& coord : row) coord = draw(rng, static_cast<int>(denom) + 1);
  }
  return g;
}

// Push coordinate sums to D*(n+1)/2 by round-robin unit adjustments.
void repair_sums(Grid& g, std::size_t n, unsigned denom) {
  const long long target =
      static_cast<long long>(denom) * static_cast<long long>(n + 1) / 2;
  for (std::size_t i = 0; i < n; ++i) {
    long long sum = 0;
    for (const auto& row : g) sum += row[i];
    std::size_t j = 0;
    while (sum != target) {
      if (sum < target && g[j][i] < static_cast<int>(denom)) {
        ++g[j][i];
        ++sum;
      } else if (sum > target && g[j][i] > 0) {
        --g[j][i];
        --sum;
      }
      j = (j + 1) % g.size();
    }
  }
}

bool lexicographically_less(const Grid& a, const Grid& b) {
  return a < b;  // vectors compare lexicographically, rows then entries
}

struct Move {
  std::size_t vertex;
  std::size_t coord;
  int new_value;          // unlocked move
  std::size_t other;      // locked move: compensating vertex
  int delta;              // locked move: +-step
  bool paired;
};

// Neighborhood in a fixed scan order; determinism depends on it.
std::vector<Move> neighborhood(const Grid& g, std::size_t n, unsigned denom,
                               bool centroid_lock) {
  std::vector<Move> moves;
  const int d = static_cast<int>(denom);
  if (!centroid_lock) {
    for (std::size_t a = 0; a < g.size(); ++a) {
      for (std::size_t i = 0; i < n; ++i) {
        for (int v = 0; v <= d; ++v) {
          if (v == g[a][i]) continue;
          moves.push_back({a, i, v, 0, 0, false});
        }
      }
    }
    return moves;
  }
  static constexpr int kDeltas[] = {1, 2, 4, 8};
  for (std::size_t a = 0; a < g.size(); ++a) {
    for (std::size_t b = 0; b < g.size(); ++b) {
      if (a == b) continue;
      for (std::size_t i = 0; i < n; ++i) {
        for (int step : kDeltas) {
          if (step > d) break;
          if (g[a][i] + step <= d && g[b][i] - step >= 0) {
            moves.push_back({a, i, 0, b, step, true});
          }
        }
      }
    }
  }
  return moves;
}

void apply_move(Grid& g, const Move& m) {
  if (m.paired) {
    g[m.vertex][m.coord] += m.delta;
    g[m.other][m.coord] -= m.delta;
  } else {
    g[m.vertex][m.coord] = m.new_value;
  }
}

void undo_move(Grid& g, const Move& m, int saved_a, int saved_b) {
  g[m.vertex][m.coord] = saved_a;
  if (m.paired) g[m.other][m.coord] = saved_b;
}

constexpr double kScreenTol = 1e-9;
constexpr int kSampleRetries = 1000;

}  // namespace

Simplex random_simplex(std::size_t n, unsigned grid_denominator,
                       std::uint64_t seed) {
  if (n == 0 || grid_denominator == 0) {
    throw DomainError("dimension and grid denominator must be positive");
  }
  std::mt19937_64 rng(splitmix64(seed));
  for (int attempt = 0; attempt < kSampleRetries; ++attempt) {
    Grid g = sample_grid(rng, n, grid_denominator);
    if (grid_nondegenerate(g)) return grid_to_simplex(g, grid_denominator);
  }
  throw DomainError("grid too coarse to sample a nondegenerate simplex");
}

SearchResult local_search(const SearchConfig& cfg) {
  if (cfg.n == 0 || cfg.grid_denominator == 0 || cfg.restarts == 0) {
    throw DomainError("invalid search config");
  }
  if (cfg.centroid_lock &&
      (cfg.grid_denominator * (cfg.n + 1)) % 2 != 0) {
    throw DomainError(
        "centroid lock needs D*(n+1) even so the center sum lies on the grid");
  }
  const std::size_t n = cfg.n;
  const unsigned denom = cfg.grid_denominator;

  bool have_best = false;
  Grid best_grid;
  Rational best_xi;
  std::vector<std::pair<std::size_t, Rational>> best_trace;

  for (std::size_t r = 0; r < cfg.restarts; ++r) {
    std::mt19937_64 rng(
        splitmix64(cfg.seed + 0x9E3779B97F4A7C15ull * (r + 1)));

    Grid current;
    bool sampled = false;
    for (int attempt = 0; attempt < kSampleRetries; ++attempt) {
      Grid g = sample_grid(rng, n, denom);
      if (cfg.centroid_lock) repair_sums(g, n, denom);
      if (grid_nondegenerate(g)) {
        current = std::move(g);
        sampled = true;
        break;
      }
    }
    if (!sampled) {
      throw DomainError("grid too coarse to sample a nondegenerate simplex");
    }

    Rational current_xi = xi_cube(grid_to_simplex(current, denom));
    double current_float = xi_float_of(current, n, denom);
    std::vector<std::pair<std::size_t, Rational>> trace{{0, current_xi}};

    std::size_t steps = 0;
    bool improved = true;
    while (improved && steps < cfg.max_steps) {
      improved = false;
      for (const Move& m : neighborhood(current, n, denom, cfg.centroid_lock)) {
        const int saved_a = current[m.vertex][m.coord];
        const int saved_b = m.paired ? current[m.other][m.coord] : 0;
        apply_move(current, m);
        const double f = xi_float_of(current, n, denom);
        if (f < current_float - kScreenTol && grid_nondegenerate(current)) {
          Rational exact = xi_cube(grid_to_simplex(current, denom));
          if (exact < current_xi) {
            current_xi = std::move(exact);
            current_float = f;
            ++steps;
            trace.emplace_back(steps, current_xi);
            improved = true;
            break;
          }
        }
        undo_move(current, m, saved_a, saved_b);
      }
    }

    if (!have_best || current_xi < best_xi ||
        (current_xi == best_xi && lexicographically_less(current, best_grid))) {
      have_best = true;
      best_grid = std::move(current);
      best_xi = std::move(current_xi);
      best_trace = std::move(trace);
    }
  }

  SearchResult result{grid_to_simplex(best_grid, denom), 0.0, best_xi,
                      std::move(best_trace)};
  result.xi_float = xi_float_of(best_grid, n, denom);
  if (result.xi_exact < Rational(static_cast<long long>(n))) {
    throw std::logic_error("search produced xi below the dimension bound");
  }
  return result;
}

Certificate confirm(const Simplex& s) { return certify(s, std::nullopt); }

}  // namespace simcube
