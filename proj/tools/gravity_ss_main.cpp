#include "gravity/run.hpp"

#include "gravity/errors.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <string>

namespace {

using gravity::CommandResult;
using gravity::ErrorKind;
using gravity::Json;
using gravity::PageRequest;

Json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) gravity::fail(ErrorKind::BadInput, "cannot open " + path);
    Json j;
    try {
        in >> j;
    } catch (const Json::parse_error& e) {
        gravity::fail(ErrorKind::Parse, path + ": " + e.what());
    }
    return j;
}

bool wants_csv(const std::string& path) {
    return path.size() > 4 && path.compare(path.size() - 4, 4, ".csv") == 0;
}

int deliver(const CommandResult& result, const std::string& out_path) {
    if (wants_csv(out_path)) {
        if (result.csv.empty())
            gravity::fail(ErrorKind::BadInput, "this subcommand has no CSV form");
        std::ofstream out(out_path);
        if (!out) gravity::fail(ErrorKind::BadInput, "cannot write " + out_path);
        out << result.csv;
    } else if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) gravity::fail(ErrorKind::BadInput, "cannot write " + out_path);
        out << result.output.dump(2) << '\n';
    } else {
        std::cout << result.output.dump(2) << '\n';
    }
    return result.exit_code;
}

// Flags beat the request file so one file can drive a sweep.
struct BoxFlags {
    int p = -1;
    int max_s = -1;
    int max_degree = -1;
    int max_weight = -1;
    std::string mode;

    void add_to(CLI::App& cmd, bool with_mode) {
        cmd.add_option("--p", p, "prime for coefficients");
        cmd.add_option("--max-s", max_s, "cobar length bound");
        cmd.add_option("--max-degree", max_degree, "internal degree bound");
        cmd.add_option("--max-weight", max_weight, "word weight bound");
        if (with_mode)
            cmd.add_option("--mode", mode, "shuffle | cobar | compare | e2");
    }

    PageRequest apply(PageRequest request) const {
        if (p >= 0) request.box.p = static_cast<uint32_t>(p);
        if (max_s >= 0) request.box.max_s = max_s;
        if (max_degree >= 0) request.box.max_degree = max_degree;
        if (max_weight >= 0) request.box.max_weight = max_weight;
        if (!mode.empty()) request.mode = mode;
        return request;
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"gravity filtration and cobar spectral sequence calculator"};
    app.require_subcommand(1);

    std::string input;
    std::string output;

    auto* geometry = app.add_subcommand("geometry", "degrees and deformation data of a configuration");
    geometry->add_option("--input", input, "configuration JSON")->required();
    geometry->add_option("--output", output, "output path (default stdout)");

    auto* page = app.add_subcommand("page", "E1/E2 of the gravity filtration");
    page->add_option("--input", input, "page request JSON")->required();
    page->add_option("--output", output, "output path; .csv gives a dims table");
    BoxFlags page_flags;
    page_flags.add_to(*page, true);
    bool page_matrices = false;
    page->add_flag("--matrices", page_matrices, "include differentials as sparse triplets");

    auto* cotor_cmd = app.add_subcommand("cotor", "Cotor of a finite coalgebra table");
    cotor_cmd->add_option("--input", input, "coalgebra JSON")->required();
    cotor_cmd->add_option("--output", output, "output path; .csv gives a dims table");
    BoxFlags cotor_flags;
    cotor_flags.add_to(*cotor_cmd, false);
    bool cotor_matrices = false;
    cotor_cmd->add_flag("--matrices", cotor_matrices, "include homology representatives");

    auto* verify = app.add_subcommand("verify", "d^2, route agreement, and Euler checks");
    verify->add_option("--input", input, "page request JSON")->required();
    verify->add_option("--output", output, "output path (default stdout)");
    BoxFlags verify_flags;
    verify_flags.add_to(*verify, false);

    auto* gen = app.add_subcommand("gen", "random valid configuration");
    int gen_n = 2;
    int gen_j = 3;
    uint64_t gen_seed = 0;
    gen->add_option("--n", gen_n, "ambient dimension");
    gen->add_option("--j", gen_j, "number of cubes");
    gen->add_option("--seed", gen_seed, "generator seed");
    gen->add_option("--output", output, "output path (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (geometry->parsed()) return deliver(gravity::run_geometry(read_json(input)), output);
        if (page->parsed()) {
            PageRequest request = page_flags.apply(gravity::parse_request(read_json(input)));
            return deliver(gravity::run_page(request, page_matrices), output);
        }
        if (cotor_cmd->parsed()) {
            Json coalgebra = read_json(input);
            if (cotor_flags.p >= 0 && coalgebra.contains("p") &&
                coalgebra["p"].get<int>() != cotor_flags.p)
                gravity::fail(ErrorKind::PrimeMismatch, "--p disagrees with the input file");
            int max_s = cotor_flags.max_s >= 0 ? cotor_flags.max_s : 5;
            int max_degree = cotor_flags.max_degree >= 0 ? cotor_flags.max_degree : 20;
            return deliver(gravity::run_cotor(coalgebra, max_s, max_degree, cotor_matrices),
                           output);
        }
        if (verify->parsed()) {
            PageRequest request = verify_flags.apply(gravity::parse_request(read_json(input)));
            return deliver(gravity::run_verify(request), output);
        }
        if (gen->parsed()) {
            gravity::CubeConfig cfg = gravity::gen_random_config(gen_n, gen_j, gen_seed);
            return deliver({gravity::emit_config(cfg), "", 0}, output);
        }
    } catch (const gravity::Error& e) {
        std::cerr << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
