#include "gravity/json_io.hpp"

#include "gravity/errors.hpp"

#include <sstream>

namespace gravity {

namespace {

Rational rational_field(const Json& j, const char* what) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_number())
        fail(ErrorKind::Parse,
             std::string(what) + ": write non-integer rationals as strings to keep them exact");
    fail(ErrorKind::Parse, std::string(what) + " must be a rational string");
}

uint32_t coeff_field(const Json& j, uint32_t p) {
    long long v = 0;
    if (j.is_string()) {
        try {
            v = std::stoll(j.get<std::string>());
        } catch (const std::exception&) {
            fail(ErrorKind::Parse, "bad coefficient '" + j.get<std::string>() + "'");
        }
    } else if (j.is_number_integer()) {
        v = j.get<long long>();
    } else {
        fail(ErrorKind::Parse, "coefficients must be integers");
    }
    return fp_from_int(v, p);
}

const Json& field(const Json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) fail(ErrorKind::Parse, std::string("missing field '") + key + "'");
    return *it;
}

}  // namespace

CubeConfig parse_config(const Json& j) {
    if (!j.is_object()) fail(ErrorKind::Parse, "config must be an object");
    int n = field(j, "n").get<int>();
    const Json& cubes_json = field(j, "cubes");
    if (!cubes_json.is_array()) fail(ErrorKind::Parse, "'cubes' must be an array");
    std::vector<LittleCube> cubes;
    for (size_t i = 0; i < cubes_json.size(); ++i) {
        const Json& axes_json = field(cubes_json[i], "axes");
        if (!axes_json.is_array())
            fail(ErrorKind::Parse, "cube " + std::to_string(i + 1) + ": 'axes' must be an array");
        LittleCube cube;
        for (size_t a = 0; a < axes_json.size(); ++a) {
            std::string at = "cube " + std::to_string(i + 1) + " axis " + std::to_string(a + 1);
            cube.axes.push_back({rational_field(field(axes_json[a], "center"), at.c_str()),
                                 rational_field(field(axes_json[a], "radius"), at.c_str())});
        }
        if (cube.dim() != n)
            fail(ErrorKind::Parse, "cube " + std::to_string(i + 1) + " has " +
                                       std::to_string(cube.dim()) + " axes, expected " +
                                       std::to_string(n));
        cubes.push_back(std::move(cube));
    }
    return CubeConfig::validate_config(std::move(cubes));
}

Json emit_config(const CubeConfig& cfg) {
    Json cubes = Json::array();
    for (const LittleCube& cube : cfg.cubes()) {
        Json axes = Json::array();
        for (const Axis& axis : cube.axes)
            axes.push_back({{"center", format_rational(axis.center)},
                            {"radius", format_rational(axis.radius)}});
        cubes.push_back({{"axes", std::move(axes)}});
    }
    return {{"n", cfg.dim()}, {"cubes", std::move(cubes)}};
}

Coalgebra parse_coalgebra(const Json& j) {
    if (!j.is_object()) fail(ErrorKind::Parse, "coalgebra must be an object");
    uint32_t p = field(j, "p").get<uint32_t>();
    require_prime(p);
    std::vector<BasisElement> basis;
    for (const Json& e : field(j, "basis")) {
        BasisElement elt;
        elt.name = field(e, "name").get<std::string>();
        elt.degree = field(e, "deg").get<int>();
        if (e.contains("weight")) elt.weight = e["weight"].get<int>();
        basis.push_back(std::move(elt));
    }
    GradedSpace space(p, std::move(basis));
    std::vector<std::vector<CoproductTerm>> delta(space.dim());
    if (j.contains("coproduct"))
        for (const auto& [name, terms] : j["coproduct"].items()) {
            int x = space.find(name);
            if (x < 0) fail(ErrorKind::Parse, "coproduct of unknown element '" + name + "'");
            for (const Json& term : terms) {
                if (!term.is_array() || term.size() != 3)
                    fail(ErrorKind::Parse, "coproduct terms must be [left, right, coeff]");
                int left = space.find(term[0].get<std::string>());
                int right = space.find(term[1].get<std::string>());
                if (left < 0 || right < 0)
                    fail(ErrorKind::Parse,
                         "coproduct of '" + name + "' references an unknown element");
                delta[x].push_back({left, right, coeff_field(term[2], p)});
            }
        }
    int complete = INT_MAX;
    if (j.contains("completeDegree")) complete = j["completeDegree"].get<int>();
    return Coalgebra::from_table(std::move(space), std::move(delta), complete);
}

Json emit_coalgebra(const Coalgebra& c) {
    const GradedSpace& sp = c.space();
    Json basis = Json::array();
    for (const BasisElement& e : sp.basis()) {
        Json elt = {{"name", e.name}, {"deg", e.degree}};
        if (e.weight != 1) elt["weight"] = e.weight;
        basis.push_back(std::move(elt));
    }
    Json coproduct = Json::object();
    for (int x = 0; x < sp.dim(); ++x) {
        if (c.coproduct(x).empty()) continue;
        Json terms = Json::array();
        for (const CoproductTerm& t : c.coproduct(x))
            terms.push_back({sp.element(t.left).name, sp.element(t.right).name, t.coeff});
        coproduct[sp.element(x).name] = std::move(terms);
    }
    Json out = {{"p", c.prime()}, {"basis", std::move(basis)}, {"coproduct", std::move(coproduct)}};
    if (c.complete_degree() != INT_MAX) out["completeDegree"] = c.complete_degree();
    return out;
}

PageRequest parse_request(const Json& j) {
    if (!j.is_object()) fail(ErrorKind::Parse, "request must be an object");
    PageRequest r;
    for (const Json& d : field(j, "X")) r.x.dims.push_back(d.get<int>());
    if (j.contains("p")) r.box.p = j["p"].get<uint32_t>();
    if (j.contains("maxS")) r.box.max_s = j["maxS"].get<int>();
    if (j.contains("maxDegree")) r.box.max_degree = j["maxDegree"].get<int>();
    if (j.contains("maxWeight")) r.box.max_weight = j["maxWeight"].get<int>();
    if (j.contains("mode")) r.mode = j["mode"].get<std::string>();
    if (r.mode != "shuffle" && r.mode != "cobar" && r.mode != "compare" && r.mode != "e2")
        fail(ErrorKind::Parse, "mode must be shuffle, cobar, compare, or e2");
    return r;
}

Json emit_request(const PageRequest& r) {
    return {{"X", r.x.dims},           {"p", r.box.p},
            {"maxS", r.box.max_s},     {"maxDegree", r.box.max_degree},
            {"maxWeight", r.box.max_weight}, {"mode", r.mode}};
}

std::string bidegree_key(int s, int t) {
    return std::to_string(-s) + "," + std::to_string(t);
}

Json dims_json(const DimTable& table) {
    Json out = Json::object();
    for (const auto& [key, dim] : table) out[bidegree_key(key.first, key.second)] = dim;
    return out;
}

std::string page_csv(const BigradedPage& page) {
    std::ostringstream out;
    out << "page,s,t,weight,dim\n";
    auto rows = [&](const char* label, const std::map<int, DimTable>& tables) {
        for (const auto& [w, table] : tables)
            for (const auto& [key, dim] : table)
                out << label << "," << -key.first << "," << key.second << "," << w << "," << dim
                    << "\n";
    };
    rows("E1", page.e1_weights);
    rows("E2", page.e2_weights);
    return out.str();
}

std::string cotor_csv(const CotorResult& result) {
    std::ostringstream out;
    out << "s,t,dim\n";
    for (const auto& [key, cell] : result.cells)
        out << -key.first << "," << key.second << "," << cell.dim << "\n";
    return out.str();
}

}  // namespace gravity
