#pragma once

#include "gravity/cobar.hpp"
#include "gravity/cube_geometry.hpp"
#include "gravity/gravity_page.hpp"

#include "json.hpp"

#include <string>

namespace gravity {

using Json = nlohmann::json;

// {"n": 2, "cubes": [{"axes": [{"center": "p/q", "radius": "p/q"}, ...]}, ...]};
// rationals as "p/q" or decimal strings, or plain JSON integers.
CubeConfig parse_config(const Json& j);
Json emit_config(const CubeConfig& cfg);

// {"p": 2, "basis": [{"name": "x", "deg": 2}, ...],
//  "coproduct": {"xx": [["x", "x", 1], ...], ...}}
Coalgebra parse_coalgebra(const Json& j);
Json emit_coalgebra(const Coalgebra& c);

struct PageRequest {
    SphereWedge x;
    PageBox box;
    std::string mode = "compare";  // shuffle | cobar | compare | e2
};

// {"X": [1,1], "p": 2, "maxS": 5, "maxDegree": 20, "maxWeight": 6, "mode": "compare"}
PageRequest parse_request(const Json& j);
Json emit_request(const PageRequest& r);

std::string bidegree_key(int s, int t);  // "-s,t"
Json dims_json(const DimTable& table);

std::string page_csv(const BigradedPage& page);
std::string cotor_csv(const CotorResult& result);

}  // namespace gravity
