#pragma once

#include <json.hpp>

#include "simcube/cube_analysis.hpp"
#include "simcube/search.hpp"
#include "simcube/simplex.hpp"

namespace simcube {

// Document form {"n": 3, "vertices": [["1/2","0","0"], ...]}; rationals
// are canonical "p/q" strings throughout, so parse(print(s)) == s.
nlohmann::ordered_json simplex_to_json(const Simplex& s);
Simplex simplex_from_json(const nlohmann::json& doc);

nlohmann::ordered_json certificate_to_json(const Certificate& cert);

nlohmann::ordered_json search_result_to_json(const SearchResult& result);

}  // namespace simcube
