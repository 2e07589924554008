#include "simcube/json_io.hpp"

#include <string>

#include "simcube/errors.hpp"

namespace simcube {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

ordered_json point_to_json(const Point& p) {
  ordered_json arr = ordered_json::array();
  for (const Rational& c : p) arr.push_back(c.str());
  return arr;
}

}  // namespace

ordered_json simplex_to_json(const Simplex& s) {
  ordered_json doc;
  doc["n"] = s.dim();
  ordered_json vertices = ordered_json::array();
  for (const Point& v : s.vertices()) vertices.push_back(point_to_json(v));
  doc["vertices"] = vertices;
  return doc;
}

Simplex simplex_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("vertices") ||
      !doc["n"].is_number_unsigned() || !doc["vertices"].is_array()) {
    throw ParseError("simplex document needs {\"n\": int, \"vertices\": [...]}");
  }
  const std::size_t n = doc["n"].get<std::size_t>();
  std::vector<Point> vertices;
  vertices.reserve(doc["vertices"].size());
  for (const json& row : doc["vertices"]) {
    if (!row.is_array()) {
      throw ParseError("simplex vertex must be an array of rational strings");
    }
    Point v;
    v.reserve(row.size());
    for (const json& coord : row) {
      if (!coord.is_string()) {
        throw ParseError("vertex coordinate must be a rational string");
      }
      v.push_back(Rational::parse(coord.get<std::string>()));
    }
    vertices.push_back(std::move(v));
  }
  if (vertices.size() != n + 1) {
    throw ParseError("simplex document: expected n+1 vertices");
  }
  for (const Point& v : vertices) {
    if (v.size() != n) {
      throw ParseError("simplex document: vertex length differs from n");
    }
  }
  try {
    return Simplex(std::move(vertices));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

ordered_json certificate_to_json(const Certificate& cert) {
  ordered_json doc;
  doc["xi"] = cert.xi.str();
  doc["alpha"] = cert.alpha.str();
  ordered_json diameters = ordered_json::array();
  for (const AxialDiameter& axis : cert.diameters.axes) {
    ordered_json entry;
    entry["d"] = axis.length.str();
    entry["center"] = point_to_json(axis.center);
    ordered_json weights = ordered_json::array();
    for (const Rational& w : axis.weights) weights.push_back(w.str());
    entry["weights"] = weights;
    diameters.push_back(entry);
  }
  doc["diameters"] = diameters;
  doc["circumscribed"] = cert.circumscribed;
  doc["perfect"] = cert.perfect;
  ordered_json incidence = ordered_json::object();
  for (std::size_t mask = 0; mask < cert.incidence.size(); ++mask) {
    ordered_json facets = ordered_json::array();
    for (std::size_t j : cert.incidence[mask]) facets.push_back(j);
    incidence[std::to_string(mask)] = facets;
  }
  doc["incidence"] = incidence;
  doc["incidence_count"] = cert.incidence_count;
  return doc;
}

ordered_json search_result_to_json(const SearchResult& result) {
  ordered_json doc;
  doc["best"] = simplex_to_json(result.best);
  doc["xi_float"] = result.xi_float;
  doc["xi_exact"] = result.xi_exact.str();
  ordered_json trace = ordered_json::array();
  for (const auto& [step, xi] : result.trace) {
    ordered_json entry;
    entry["step"] = step;
    entry["xi"] = xi.str();
    trace.push_back(entry);
  }
  doc["trace"] = trace;
  return doc;
}

}  // namespace simcube
