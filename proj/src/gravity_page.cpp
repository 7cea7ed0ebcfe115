#include "gravity/gravity_page.hpp"

#include "gravity/errors.hpp"
#include "gravity/parallel.hpp"

#include <algorithm>
#include <string>

namespace gravity {

namespace {

GradedSpace wedge_generators(const SphereWedge& x, uint32_t p) {
    if (x.dims.empty()) fail(ErrorKind::BadInput, "X needs at least one sphere");
    std::vector<BasisElement> basis;
    for (size_t i = 0; i < x.dims.size(); ++i) {
        if (x.dims[i] < 1)
            fail(ErrorKind::BadInput, "sphere dimensions must be at least 1");
        std::string name = x.dims.size() <= 26
                               ? std::string(1, static_cast<char>('a' + i))
                               : "g" + std::to_string(i + 1);
        basis.push_back({std::move(name), x.dims[i] + 1, 1});
    }
    return GradedSpace(p, std::move(basis));
}

PageBox checked(PageBox box) {
    require_prime(box.p);
    if (box.max_s < 1 || box.max_degree < 1 || box.max_weight < 1)
        fail(ErrorKind::BadInput, "page box bounds must be positive");
    return box;
}

}  // namespace

GravityE1::GravityE1(const SphereWedge& x, const PageBox& box)
    : box_(checked(box)),
      tc_(tensor_algebra(wedge_generators(x, box_.p), box_.max_weight, box_.max_degree)),
      cx_(tc_.coalgebra, box_.max_weight, box_.max_degree, box_.max_weight) {}

std::vector<WordCoeff> GravityE1::d1_shuffle(const Blocks& word) const {
    const GradedSpace& sp = tc_.coalgebra.space();
    uint32_t p = box_.p;
    std::map<Blocks, uint32_t> acc;
    int eps = 0;
    for (size_t m = 0; m < word.size(); ++m) {
        const std::vector<int>& letters = tc_.letters[word[m]];
        int jm = static_cast<int>(letters.size());
        std::vector<int> degs(jm);
        for (int i = 0; i < jm; ++i) degs[i] = tc_.generators.element(letters[i]).degree;
        for (int cut = 1; cut < jm; ++cut) {
            for (const SignedShuffle& sh : shuffle_sum(cut, jm - cut, degs)) {
                std::vector<int> first, second;
                first.reserve(cut);
                second.reserve(jm - cut);
                int left_deg = 0;
                for (int slot = 0; slot < cut; ++slot) {
                    first.push_back(letters[sh.slot_to_source[slot]]);
                    left_deg += degs[sh.slot_to_source[slot]];
                }
                for (int slot = cut; slot < jm; ++slot)
                    second.push_back(letters[sh.slot_to_source[slot]]);
                int li = tc_.word_index(first);
                int ri = tc_.word_index(second);
                if (li < 0 || ri < 0)
                    fail(ErrorKind::Unreachable, "shuffle factor fell outside the box");
                Blocks w;
                w.reserve(word.size() + 1);
                w.insert(w.end(), word.begin(), word.begin() + m);
                w.push_back(li);
                w.push_back(ri);
                w.insert(w.end(), word.begin() + m + 1, word.end());
                long long parity = 1 + eps + left_deg + (sh.sign < 0 ? 1 : 0);
                uint32_t& slot = acc[std::move(w)];
                slot = fp_add(slot, parity % 2 == 0 ? 1 : p - 1, p);
            }
        }
        eps += sp.element(word[m]).degree - 1;
    }
    std::vector<WordCoeff> out;
    for (auto& [w, coeff] : acc)
        if (coeff != 0) out.push_back({w, coeff});
    return out;
}

std::vector<WordCoeff> GravityE1::d1_cobar(const Blocks& word) const {
    return cobar_differential(tc_.coalgebra, word);
}

FpMatrix GravityE1::shuffle_matrix(int s, int t) const {
    const std::vector<Blocks>& sources = cx_.words(s, t);
    const std::vector<Blocks>& targets = cx_.words(s + 1, t);
    FpMatrix d(static_cast<int>(targets.size()), static_cast<int>(sources.size()), box_.p);
    for (int col = 0; col < static_cast<int>(sources.size()); ++col)
        for (const WordCoeff& term : d1_shuffle(sources[col])) {
            int row = cx_.word_index(s + 1, t, term.word);
            if (row < 0) fail(ErrorKind::Unreachable, "shuffle term fell outside the box");
            d.add_at(row, col, term.coeff);
        }
    return d;
}

CompareReport compare_d1(const GravityE1& e1) {
    const CobarComplex& cx = e1.complex();
    for (int s = 0; s <= e1.internal_max_s() + 1; ++s)
        for (int t = 0; t <= e1.box().max_degree; ++t) {
            if (cx.words(s, t).empty()) continue;
            FpMatrix shuffle = e1.shuffle_matrix(s, t);
            const FpMatrix& cobar = cx.differential(s, t);
            if (shuffle == cobar) continue;
            for (int c = 0; c < shuffle.cols(); ++c)
                for (int r = 0; r < shuffle.rows(); ++r)
                    if (shuffle.at(r, c) != cobar.at(r, c))
                        return {false,
                                "d1 routes differ on " +
                                    format_word(e1.blocks().coalgebra, cx.words(s, t)[c]) +
                                    " at target " +
                                    format_word(e1.blocks().coalgebra, cx.words(s + 1, t)[r])};
        }
    return {true, ""};
}

BigradedPage compute_E2(const GravityE1& e1) {
    const CobarComplex& cx = e1.complex();
    const PageBox& box = e1.box();
    BigradedPage page;
    page.box = box;
    page.truncated = e1.truncated();
    page.complete_degree = e1.complete_degree();

    // Split every cell by weight; the differential never crosses weights.
    struct WeightCell {
        int s, t, weight;
        std::vector<int> cols;       // word positions of this weight at (s,t)
        FpMatrix d;                  // restriction of d(s,t) to this weight
        int rank = 0;

        WeightCell(uint32_t p) : d(0, 0, p) {}
    };
    std::vector<WeightCell> wcells;
    std::map<std::tuple<int, int, int>, int> pos;  // (s,t,weight) -> index in wcells

    auto weight_cols = [&](int s, int t) {
        std::map<int, std::vector<int>> by_weight;
        const std::vector<Blocks>& words = cx.words(s, t);
        for (int i = 0; i < static_cast<int>(words.size()); ++i)
            by_weight[cx.word_weight(words[i])].push_back(i);
        return by_weight;
    };

    const std::vector<int> no_rows;
    for (int s = 0; s <= e1.internal_max_s(); ++s)
        for (int t = 0; t <= box.max_degree; ++t) {
            if (cx.words(s, t).empty()) continue;
            auto sources = weight_cols(s, t);
            auto targets = weight_cols(s + 1, t);
            const FpMatrix& d = cx.differential(s, t);
            for (auto& [w, cols] : sources) {
                WeightCell cell(box.p);
                cell.s = s;
                cell.t = t;
                cell.weight = w;
                cell.cols = cols;
                auto tit = targets.find(w);
                const std::vector<int>& rows = tit == targets.end() ? no_rows : tit->second;
                cell.d = FpMatrix(static_cast<int>(rows.size()),
                                  static_cast<int>(cols.size()), box.p);
                for (int c = 0; c < static_cast<int>(cols.size()); ++c)
                    for (int r = 0; r < static_cast<int>(rows.size()); ++r)
                        cell.d.set(r, c, d.at(rows[r], cols[c]));
                pos[{s, t, w}] = static_cast<int>(wcells.size());
                wcells.push_back(std::move(cell));
            }
            // any entry between different weights means the split is wrong
            std::map<int, int> col_weight, row_weight;
            for (auto& [w, cols] : sources)
                for (int c : cols) col_weight[c] = w;
            for (auto& [w, rows] : targets)
                for (int r : rows) row_weight[r] = w;
            for (int c = 0; c < d.cols(); ++c)
                for (int r = 0; r < d.rows(); ++r)
                    if (d.at(r, c) != 0 && row_weight[r] != col_weight[c])
                        fail(ErrorKind::Unreachable, "differential crossed weights");
        }

    parallel_for(static_cast<int>(wcells.size()),
                 [&](int i) { wcells[i].rank = wcells[i].d.rank(); });

    auto rank_at = [&](int s, int t, int w) {
        auto it = pos.find({s, t, w});
        return it == pos.end() ? 0 : wcells[it->second].rank;
    };

    for (const WeightCell& cell : wcells) {
        if (cell.s > box.max_s) continue;
        int dim1 = static_cast<int>(cell.cols.size());
        int dim2 = dim1 - cell.rank - rank_at(cell.s - 1, cell.t, cell.weight);
        if (dim1 > 0) {
            page.e1[{cell.s, cell.t}] += dim1;
            page.e1_weights[cell.weight][{cell.s, cell.t}] += dim1;
        }
        if (dim2 > 0) {
            page.e2[{cell.s, cell.t}] += dim2;
            page.e2_weights[cell.weight][{cell.s, cell.t}] += dim2;
        }
    }
    return page;
}

std::map<int, BigradedPage> weight_split(const BigradedPage& page) {
    std::map<int, BigradedPage> out;
    for (const auto& [w, table] : page.e1_weights) {
        BigradedPage sub;
        sub.box = page.box;
        sub.truncated = false;  // per-weight complexes close inside the box
        sub.complete_degree = page.box.max_degree;
        sub.e1 = table;
        if (page.e2_weights.count(w)) sub.e2 = page.e2_weights.at(w);
        sub.e1_weights[w] = table;
        if (page.e2_weights.count(w)) sub.e2_weights[w] = sub.e2;
        out[w] = std::move(sub);
    }
    return out;
}

}  // namespace gravity
