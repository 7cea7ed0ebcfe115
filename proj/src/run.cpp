#include "gravity/run.hpp"

#include "gravity/errors.hpp"

#include <algorithm>
#include <random>
#include <string>

namespace gravity {

namespace {

Json matrix_triplets(const FpMatrix& m) {
    Json out = Json::array();
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c)
            if (m.at(r, c) != 0) out.push_back({r, c, m.at(r, c)});
    return out;
}

Json box_json(const PageBox& box, int complete_degree) {
    return {{"p", box.p},
            {"maxS", box.max_s},
            {"maxDegree", box.max_degree},
            {"maxWeight", box.max_weight},
            {"completeDegree", complete_degree}};
}

Json weight_tables_json(const std::map<int, DimTable>& tables) {
    Json out = Json::object();
    for (const auto& [w, table] : tables) out[std::to_string(w)] = dims_json(table);
    return out;
}

}  // namespace

CommandResult run_geometry(const Json& config_json) {
    CubeConfig cfg = parse_config(config_json);
    int j = cfg.size();
    Json u = Json::object();
    for (int s = 1; s <= j; ++s) u[std::to_string(s)] = format_rational(u_value(cfg, s));
    Json sig = Json::object();
    int reachable = distinct_first_centers(cfg);
    for (int s = 1; s <= reachable; ++s) sig[std::to_string(s)] = format_rational(sigma(cfg, s));
    Json decomposable = Json::object();
    for (int s = 1; s <= j; ++s) decomposable[std::to_string(s)] = is_decomposable(cfg, s);
    Json out = {{"n", cfg.dim()},
                {"j", j},
                {"gravity_degree", gravity_degree(cfg)},
                {"skewer_degree", skewer_degree(cfg)},
                {"u", std::move(u)},
                {"sigma", std::move(sig)},
                {"decomposable", std::move(decomposable)}};
    return {std::move(out), "", 0};
}

CommandResult run_page(const PageRequest& request, bool matrices) {
    GravityE1 e1(request.x, request.box);
    BigradedPage page = compute_E2(e1);
    Json pages = {{"E1", dims_json(page.e1)}};
    Json out = {{"box", box_json(request.box, page.complete_degree)},
                {"truncated", page.truncated},
                {"mode", request.mode}};
    int exit_code = page.truncated ? 3 : 0;
    if (request.mode == "compare") {
        CompareReport report = compare_d1(e1);
        out["verdict"] = report.equal ? "equal" : "unequal";
        if (!report.equal) {
            out["witness"] = report.witness;
            exit_code = 2;
        }
    }
    if (request.mode == "e2") {
        pages["E2"] = dims_json(page.e2);
        out["E1_by_weight"] = weight_tables_json(page.e1_weights);
        out["E2_by_weight"] = weight_tables_json(page.e2_weights);
    }
    if (matrices) {
        Json dump = Json::object();
        for (int s = 0; s <= e1.internal_max_s(); ++s)
            for (int t = 0; t <= request.box.max_degree; ++t) {
                if (e1.complex().words(s, t).empty()) continue;
                FpMatrix d = request.mode == "shuffle" ? e1.shuffle_matrix(s, t)
                                                       : FpMatrix(e1.complex().differential(s, t));
                if (!d.is_zero()) dump[bidegree_key(s, t)] = matrix_triplets(d);
            }
        out["matrices"] = std::move(dump);
    }
    out["pages"] = std::move(pages);
    return {std::move(out), page_csv(page), exit_code};
}

CommandResult run_cotor(const Json& coalgebra_json, int max_s, int max_degree, bool matrices) {
    Coalgebra c = parse_coalgebra(coalgebra_json);
    CotorOptions opts;
    opts.representatives = matrices;
    CotorResult result = cotor(c, max_s, max_degree, opts);
    Json dims = Json::object();
    Json reps = Json::object();
    for (const auto& [key, cell] : result.cells) {
        dims[bidegree_key(key.first, key.second)] = cell.dim;
        if (!cell.representatives.empty())
            reps[bidegree_key(key.first, key.second)] = cell.representatives;
    }
    Json out = {{"p", result.p},
                {"maxS", result.max_s},
                {"maxDegree", result.max_degree},
                {"truncated", result.truncated},
                {"completeDegree", result.complete_degree},
                {"cotor", std::move(dims)}};
    if (matrices) out["representatives"] = std::move(reps);
    return {std::move(out), cotor_csv(result), result.truncated ? 3 : 0};
}

CommandResult run_verify(const PageRequest& request) {
    // Widen the reporting bound so the Euler sums see every nonempty cell;
    // the complex itself only depends on max_weight and max_degree.
    PageBox box = request.box;
    box.max_s = std::max(box.max_s, box.max_weight);
    GravityE1 e1(request.x, box);
    Json checks = Json::object();
    bool failed = false;

    DSquaredReport cobar_sq = verify_d_squared(e1.complex());
    checks["d_squared_cobar"] = cobar_sq.ok;
    if (!cobar_sq.ok) checks["d_squared_cobar_witness"] = cobar_sq.witness;

    bool shuffle_sq = true;
    std::string shuffle_witness;
    for (int s = 0; s + 1 <= e1.internal_max_s() + 1 && shuffle_sq; ++s)
        for (int t = 0; t <= request.box.max_degree && shuffle_sq; ++t) {
            if (e1.complex().words(s, t).empty() || e1.complex().words(s + 2, t).empty()) continue;
            FpMatrix square = e1.shuffle_matrix(s + 1, t).times(e1.shuffle_matrix(s, t));
            if (!square.is_zero()) {
                shuffle_sq = false;
                shuffle_witness = "nonzero square at " + bidegree_key(s, t);
            }
        }
    checks["d_squared_shuffle"] = shuffle_sq;
    if (!shuffle_sq) checks["d_squared_shuffle_witness"] = shuffle_witness;

    CompareReport cmp = compare_d1(e1);
    checks["shuffle_equals_cobar"] = cmp.equal;
    if (!cmp.equal) checks["compare_witness"] = cmp.witness;

    BigradedPage page = compute_E2(e1);
    // d^1 fixes the word degree t and the weight, so rank-nullity conserves
    // the alternating sum over s within each (weight, t) slice.
    bool euler_ok = true;
    std::map<std::pair<int, int>, long long> euler1, euler2;
    for (const auto& [w, table] : page.e1_weights)
        for (const auto& [key, dim] : table)
            euler1[{w, key.second}] += (key.first % 2 == 0 ? dim : -dim);
    for (const auto& [w, table] : page.e2_weights)
        for (const auto& [key, dim] : table)
            euler2[{w, key.second}] += (key.first % 2 == 0 ? dim : -dim);
    for (const auto& [key, chi] : euler1)
        if (chi != (euler2.count(key) ? euler2[key] : 0)) euler_ok = false;
    for (const auto& [key, chi] : euler2)
        if (chi != (euler1.count(key) ? euler1[key] : 0)) euler_ok = false;
    checks["euler_conserved"] = euler_ok;

    failed = !cobar_sq.ok || !shuffle_sq || !cmp.equal || !euler_ok;
    Json out = {{"box", box_json(request.box, page.complete_degree)},
                {"truncated", page.truncated},
                {"checks", std::move(checks)},
                {"ok", !failed}};
    return {std::move(out), "", failed ? 2 : (page.truncated ? 3 : 0)};
}

CubeConfig gen_random_config(int n, int j, uint64_t seed) {
    if (n < 1 || j < 1) fail(ErrorKind::BadInput, "need n >= 1 and j >= 1");
    std::mt19937_64 rng(seed);
    // draw() rather than std::uniform_int_distribution keeps the stream
    // identical across standard libraries
    auto draw = [&](int bound) { return static_cast<int>(rng() % static_cast<uint64_t>(bound)); };
    for (int attempt = 0; attempt < 200; ++attempt) {
        int style = draw(3);  // 0 spread, 1 mixed, 2 piles
        std::vector<Rational> centers(j);
        if (style == 2) {
            int piles = 1 + draw(j);
            std::vector<Rational> pile_centers(piles);
            for (auto& c : pile_centers) c = Rational(draw(49) - 24, 32);
            for (int k = 0; k < j; ++k) centers[k] = pile_centers[draw(piles)];
        } else {
            int span = style == 0 ? 49 : 33;  // spread uses the full grid
            for (auto& c : centers) c = Rational(draw(span) - span / 2, 32);
        }
        std::vector<Rational> radii(j);
        for (int k = 0; k < j; ++k) {
            Rational scaled = centers[k] * 32;  // grid index, an integer by construction
            int room = 32 - std::abs(static_cast<int>(numerator(scaled)));
            int cap = std::min(style == 0 ? 4 : 12, room);
            radii[k] = Rational(1 + draw(cap), 32);
        }
        std::vector<int> slots(j);
        for (int k = 0; k < j; ++k) slots[k] = k;
        for (int k = j - 1; k > 0; --k) std::swap(slots[k], slots[draw(k + 1)]);

        std::vector<LittleCube> cubes(j);
        for (int k = 0; k < j; ++k) {
            LittleCube& cube = cubes[k];
            if (n == 1) {
                // disjointness must come from the first axis: shrink into slots
                Rational center = Rational(2 * slots[k] + 1, j) - 1;
                cube.axes.push_back({center, Rational(1 + draw(4), 4 * j)});
                continue;
            }
            cube.axes.push_back({centers[k], radii[k]});
            for (int a = 1; a + 1 < n; ++a) {
                int c = draw(33) - 16;
                int room = 32 - std::abs(c);
                cube.axes.push_back({Rational(c, 32), Rational(1 + draw(room), 32)});
            }
            cube.axes.push_back({Rational(2 * slots[k] + 1, j) - 1, Rational(1, j)});
        }
        try {
            return CubeConfig::validate_config(std::move(cubes));
        } catch (const Error&) {
            continue;
        }
    }
    fail(ErrorKind::GiveUp, "no valid configuration after 200 attempts");
}

}  // namespace gravity
