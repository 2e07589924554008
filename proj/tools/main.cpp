#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "simcube/constructions.hpp"
#include "simcube/cube_analysis.hpp"
#include "simcube/errors.hpp"
#include "simcube/json_io.hpp"
#include "simcube/search.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDegenerate = 2;
constexpr int kExitParse = 3;
constexpr int kExitUnsupported = 4;

std::string float17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

simcube::Simplex load_simplex(const std::string& builtin,
                              const std::string& input_path) {
  if (!builtin.empty()) {
    return simcube::builtin_simplex(builtin);
  }
  nlohmann::json doc;
  if (input_path == "-") {
    doc = nlohmann::json::parse(std::cin, nullptr, true);
  } else {
    std::ifstream in(input_path);
    if (!in) {
      throw simcube::ParseError("cannot open input file: " + input_path);
    }
    doc = nlohmann::json::parse(in, nullptr, true);
  }
  return simcube::simplex_from_json(doc);
}

int run_certify(const std::string& builtin, const std::string& input_path,
                const std::string& xi_n_text) {
  std::optional<simcube::Rational> xi_n;
  if (!xi_n_text.empty()) {
    xi_n = simcube::Rational::parse(xi_n_text);
  }
  simcube::Simplex s = load_simplex(builtin, input_path);
  simcube::Certificate cert = simcube::certify(s, xi_n);
  std::cout << simcube::certificate_to_json(cert).dump(2) << "\n";
  return kExitOk;
}

struct SweepRange {
  simcube::Rational lo;
  simcube::Rational hi;
};

std::vector<simcube::Rational> grid_points(const SweepRange& range,
                                           std::size_t steps) {
  std::vector<simcube::Rational> points;
  points.reserve(steps);
  const simcube::Rational span = range.hi - range.lo;
  const simcube::Rational denom(static_cast<long long>(steps) - 1);
  for (std::size_t k = 0; k < steps; ++k) {
    points.push_back(range.lo +
                     span * simcube::Rational(static_cast<long long>(k)) / denom);
  }
  return points;
}

int run_sweep(const std::string& family, const SweepRange& s_range,
              const SweepRange& t_range, std::size_t steps, bool have_s) {
  using simcube::FamilyParam;
  FamilyParam::Tag tag;
  if (family == "R") {
    tag = FamilyParam::Tag::R;
  } else if (family == "T") {
    tag = FamilyParam::Tag::T;
  } else if (family == "S9") {
    tag = FamilyParam::Tag::S9;
  } else {
    throw simcube::ParseError("unknown family \"" + family + "\"");
  }
  const bool wants_s = tag == FamilyParam::Tag::R;
  if (wants_s != have_s) {
    throw simcube::ParseError(wants_s ? "family R needs --s-min/--s-max"
                                      : "only family R takes an s range");
  }
  if (steps < 2) {
    throw simcube::ParseError("--steps must be at least 2");
  }

  std::vector<FamilyParam> params;
  const auto t_points = grid_points(t_range, steps);
  if (wants_s) {
    for (const auto& s : grid_points(s_range, steps)) {
      for (const auto& t : t_points) params.push_back({tag, s, t});
    }
  } else {
    for (const auto& t : t_points) {
      params.push_back({tag, simcube::Rational(0), t});
    }
  }

  std::vector<simcube::ClosedForm> rows;
  rows.reserve(params.size());
  for (const auto& p : params) rows.push_back(simcube::closed_form(p));

  // Spot-check a fixed-seed subsample of rows against the enumeration
  // route before emitting anything.
  std::mt19937_64 rng(0);
  const std::size_t checks = std::min<std::size_t>(rows.size(), 8);
  for (std::size_t c = 0; c < checks; ++c) {
    const std::size_t idx = rng() % params.size();
    const simcube::Simplex member = simcube::family_simplex(params[idx]);
    const simcube::LagrangeBasis basis = simcube::lagrange_basis(member);
    if (simcube::xi_cube(basis) != rows[idx].xi ||
        simcube::alpha_cube(basis) != rows[idx].alpha) {
      std::cerr << "sweep cross-check failed at row " << idx << "\n";
      return 1;
    }
  }

  std::cout << "s,t,xi,alpha,xi_float,alpha_float\n";
  for (std::size_t i = 0; i < params.size(); ++i) {
    const auto& p = params[i];
    const auto& row = rows[i];
    std::cout << (wants_s ? p.s.str() : "") << "," << p.t.str() << ","
              << row.xi.str() << "," << row.alpha.str() << ","
              << float17(row.xi.to_double()) << ","
              << float17(row.alpha.to_double()) << "\n";
  }
  return kExitOk;
}

int run_search(const simcube::SearchConfig& cfg, const std::string& trace_csv) {
  simcube::SearchResult result = simcube::local_search(cfg);
  if (!trace_csv.empty()) {
    std::ofstream out(trace_csv);
    if (!out) {
      throw simcube::ParseError("cannot open trace file: " + trace_csv);
    }
    out << "step,xi,xi_float\n";
    for (const auto& [step, xi] : result.trace) {
      out << step << "," << xi.str() << "," << float17(xi.to_double()) << "\n";
    }
  }
  std::cout << simcube::search_result_to_json(result).dump(2) << "\n";
  return kExitOk;
}

int run_hadamard(std::size_t order) {
  simcube::HadamardMatrix h =
      simcube::normalize_hadamard(simcube::hadamard(order));
  if (!simcube::is_hadamard(h)) {
    std::cerr << "constructed matrix failed the Hadamard self-check\n";
    return 1;
  }
  for (std::size_t i = 0; i < h.order; ++i) {
    std::string row(h.order, '+');
    for (std::size_t j = 0; j < h.order; ++j) {
      if (h.entry(i, j) < 0) row[j] = '-';
    }
    std::cout << row << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact homothety coefficients, axial diameters and cube-incidence "
      "certificates for simplices in the unit cube"};
  app.require_subcommand(1);

  auto* certify = app.add_subcommand(
      "certify", "Emit the certificate JSON for a simplex");
  std::string builtin, input_path, xi_n_text;
  auto* builtin_opt =
      certify->add_option("--builtin", builtin,
                          "Builtin id (s1, s2, perfect5, sstar:<n>, "
                          "regular:<n>, R:<s>:<t>, T:<t>, S9:<t>)");
  certify->add_option("--input", input_path,
                      "Simplex document JSON file, or - for stdin")
      ->excludes(builtin_opt);
  certify->add_option("--xi-n", xi_n_text,
                      "Known minimal xi for this dimension, as p/q");

  auto* sweep = app.add_subcommand(
      "sweep", "CSV of closed-form xi and alpha over a parameter grid");
  std::string family;
  std::string s_min, s_max, t_min, t_max;
  std::size_t steps = 2;
  sweep->add_option("--family", family, "R, T or S9")->required();
  sweep->add_option("--s-min", s_min, "s range start (family R)");
  sweep->add_option("--s-max", s_max, "s range end (family R)");
  sweep->add_option("--t-min", t_min, "t range start")->required();
  sweep->add_option("--t-max", t_max, "t range end")->required();
  sweep->add_option("--steps", steps, "grid points per parameter (>= 2)")
      ->required();

  auto* search = app.add_subcommand(
      "search", "Coordinate-descent search for small xi on a coordinate grid");
  simcube::SearchConfig cfg;
  std::string trace_csv;
  search->add_option("-n,--dimension", cfg.n, "dimension")->required();
  search->add_option("-D,--grid-denominator", cfg.grid_denominator,
                     "coordinates restricted to k/D")
      ->required();
  search->add_option("--restarts", cfg.restarts, "independent restarts");
  search->add_option("--max-steps", cfg.max_steps,
                     "accepted moves per restart");
  search->add_option("--seed", cfg.seed, "RNG seed");
  search->add_flag("--centroid-lock", cfg.centroid_lock,
                   "only moves keeping the centroid at the cube center");
  search->add_option("--trace-csv", trace_csv,
                     "write the improvement trace to this CSV file");

  auto* hadamard = app.add_subcommand(
      "hadamard", "Print a normalized Hadamard matrix as +/- rows");
  std::size_t order = 0;
  hadamard->add_option("-m,--order", order, "matrix order")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitParse;
  }

  try {
    if (certify->parsed()) {
      if (builtin.empty() == input_path.empty()) {
        std::cerr << "certify needs exactly one of --builtin or --input\n";
        return kExitParse;
      }
      return run_certify(builtin, input_path, xi_n_text);
    }
    if (sweep->parsed()) {
      const bool have_s = !s_min.empty() || !s_max.empty();
      if (have_s && (s_min.empty() || s_max.empty())) {
        std::cerr << "--s-min and --s-max go together\n";
        return kExitParse;
      }
      SweepRange sr, tr;
      if (have_s) {
        sr = {simcube::Rational::parse(s_min), simcube::Rational::parse(s_max)};
      }
      tr = {simcube::Rational::parse(t_min), simcube::Rational::parse(t_max)};
      return run_sweep(family, sr, tr, steps, have_s);
    }
    if (search->parsed()) {
      return run_search(cfg, trace_csv);
    }
    if (hadamard->parsed()) {
      return run_hadamard(order);
    }
  } catch (const simcube::DegenerateSimplexError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDegenerate;
  } catch (const simcube::UnsupportedOrderError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUnsupported;
  } catch (const simcube::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const simcube::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }
  return kExitOk;
}
