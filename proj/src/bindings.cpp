#include "gravity/run.hpp"

#include "gravity/errors.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <utility>

namespace py = pybind11;

namespace {

using gravity::Json;

Json parse(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        gravity::fail(gravity::ErrorKind::Parse, e.what());
    }
}

std::pair<std::string, int> pack(const gravity::CommandResult& result) {
    return {result.output.dump(), result.exit_code};
}

gravity::CubeConfig config_of(const std::string& text) {
    return gravity::parse_config(parse(text));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "gravity filtration and cobar spectral sequence calculator";

    py::register_exception<gravity::Error>(m, "GravityError");

    m.def(
        "geometry_report",
        [](const std::string& config) { return pack(gravity::run_geometry(parse(config))); },
        py::arg("config_json"));

    m.def(
        "page_report",
        [](const std::string& request, bool matrices) {
            return pack(gravity::run_page(gravity::parse_request(parse(request)), matrices));
        },
        py::arg("request_json"), py::arg("matrices") = false);

    m.def(
        "cotor_report",
        [](const std::string& coalgebra, int max_s, int max_degree, bool matrices) {
            return pack(gravity::run_cotor(parse(coalgebra), max_s, max_degree, matrices));
        },
        py::arg("coalgebra_json"), py::arg("max_s") = 5, py::arg("max_degree") = 20,
        py::arg("matrices") = false);

    m.def(
        "verify_report",
        [](const std::string& request) {
            return pack(gravity::run_verify(gravity::parse_request(parse(request))));
        },
        py::arg("request_json"));

    m.def(
        "gen_config",
        [](int n, int j, uint64_t seed) {
            return gravity::emit_config(gravity::gen_random_config(n, j, seed)).dump();
        },
        py::arg("n"), py::arg("j"), py::arg("seed") = 0);

    m.def(
        "page_csv",
        [](const std::string& request) {
            return gravity::run_page(gravity::parse_request(parse(request)), false).csv;
        },
        py::arg("request_json"));

    m.def(
        "gravity_degree",
        [](const std::string& config) { return gravity::gravity_degree(config_of(config)); },
        py::arg("config_json"));

    m.def(
        "skewer_degree",
        [](const std::string& config) { return gravity::skewer_degree(config_of(config)); },
        py::arg("config_json"));

    m.def(
        "u_value",
        [](const std::string& config, int s) {
            return gravity::format_rational(gravity::u_value(config_of(config), s));
        },
        py::arg("config_json"), py::arg("s"));

    m.def(
        "sigma",
        [](const std::string& config, int s) {
            return gravity::format_rational(gravity::sigma(config_of(config), s));
        },
        py::arg("config_json"), py::arg("s"));

    m.def(
        "overlap_d",
        [](const std::string& x, const std::string& center, const std::string& radius) {
            gravity::Axis b{gravity::parse_rational(center), gravity::parse_rational(radius)};
            return gravity::format_rational(gravity::overlap_d(gravity::parse_rational(x), b));
        },
        py::arg("x"), py::arg("center"), py::arg("radius"));

    m.def(
        "m_clamp",
        [](const std::string& t) {
            return gravity::format_rational(gravity::m_clamp(gravity::parse_rational(t)));
        },
        py::arg("t"));

    m.def("koszul_sign", &gravity::koszul_sign, py::arg("slot_to_source"), py::arg("degrees"));
}
