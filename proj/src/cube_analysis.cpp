#include "simcube/cube_analysis.hpp"

#include <utility>

#include "simcube/errors.hpp"

namespace simcube {

Rational ExtremalReport::global_max() const {
  Rational best = max_neg_lambda.front();
  for (const Rational& v : max_neg_lambda) best = max(best, v);
  return best;
}

ExtremalReport facet_maxima(const Simplex& s) {
  const LagrangeBasis b = lagrange_basis(s);
  const std::size_t n = s.dim();
  const std::uint32_t count = std::uint32_t{1} << n;

  ExtremalReport report;
  report.max_neg_lambda.reserve(n + 1);
  report.attaining.reserve(n + 1);
  for (std::size_t j = 1; j <= n + 1; ++j) {
    Rational best;
    std::vector<std::uint32_t> argmax;
    for (std::uint32_t mask = 0; mask < count; ++mask) {
      Rational v = -eval_lambda_at_cube_vertex(b, j, mask);
      if (mask == 0 || best < v) {
        best = std::move(v);
        argmax.assign(1, mask);
      } else if (v == best) {
        argmax.push_back(mask);
      }
    }
    report.max_neg_lambda.push_back(std::move(best));
    report.attaining.push_back(std::move(argmax));
  }
  return report;
}

namespace {

std::vector<std::vector<std::size_t>> classify_from_report(
    const ExtremalReport& report, std::size_t n) {
  const Rational global = report.global_max();
  std::vector<std::vector<std::size_t>> incidence(std::size_t{1} << n);
  for (std::size_t j = 0; j < report.attaining.size(); ++j) {
    if (report.max_neg_lambda[j] != global) continue;
    for (std::uint32_t mask : report.attaining[j]) {
      incidence[mask].push_back(j + 1);
    }
  }
  return incidence;  // facet lists come out sorted: j ascends
}

}  // namespace

std::vector<std::vector<std::size_t>> classify_vertices(const Simplex& s) {
  return classify_from_report(facet_maxima(s), s.dim());
}

std::size_t incidence_count(const Simplex& s) {
  std::size_t total = 0;
  for (const auto& facets : classify_vertices(s)) total += facets.size();
  return total;
}

bool inside_unit_cube(const Simplex& s) {
  const Rational zero(0), one(1);
  for (const Point& v : s.vertices()) {
    for (const Rational& c : v) {
      if (c < zero || one < c) return false;
    }
  }
  return true;
}

Certificate certify(const Simplex& s, const std::optional<Rational>& xi_n) {
  if (!inside_unit_cube(s)) {
    throw DomainError("simplex is not contained in the unit cube");
  }
  const std::size_t n = s.dim();
  const LagrangeBasis b = lagrange_basis(s);
  const ExtremalReport report = facet_maxima(s);

  Certificate cert;
  cert.xi = max(Rational(static_cast<long long>(n) + 1) * report.global_max() +
                    Rational(1),
                Rational(1));
  cert.alpha = alpha_cube(b);
  cert.diameters = axial_diameters(b);

  cert.circumscribed = true;
  for (const Rational& m : report.max_neg_lambda) {
    if (m != report.max_neg_lambda.front()) {
      cert.circumscribed = false;
      break;
    }
  }

  cert.incidence = classify_from_report(report, n);
  cert.incidence_count = 0;
  bool all_covered = true;
  for (const auto& facets : cert.incidence) {
    cert.incidence_count += facets.size();
    if (facets.empty()) all_covered = false;
  }

  const Rational xi_min =
      xi_n ? *xi_n : Rational(static_cast<long long>(n));
  cert.perfect = all_covered && cert.xi == xi_min;
  return cert;
}

bool check_centroid_theorem(const Simplex& s) {
  if (!inside_unit_cube(s)) return true;
  if (Rational(static_cast<long long>(s.dim())) < xi_cube(s)) return true;
  const Rational half(1, 2);
  for (const Rational& c : centroid(s)) {
    if (c != half) return false;
  }
  return true;
}

}  // namespace simcube
