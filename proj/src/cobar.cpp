#include "gravity/cobar.hpp"

#include "gravity/errors.hpp"
#include "gravity/parallel.hpp"

#include <algorithm>
#include <utility>

namespace gravity {

namespace {

// coeff * (-1)^parity mod p
uint32_t with_parity(uint32_t coeff, long long parity, uint32_t p) {
    return parity % 2 == 0 ? coeff : fp_neg(coeff, p);
}

}  // namespace

std::vector<WordCoeff> cobar_differential(const Coalgebra& c, const Blocks& word) {
    const GradedSpace& sp = c.space();
    uint32_t p = c.prime();
    std::map<Blocks, uint32_t> acc;
    int eps = 0;
    for (size_t i = 0; i < word.size(); ++i) {
        for (const CoproductTerm& t : c.coproduct(word[i])) {
            Blocks w;
            w.reserve(word.size() + 1);
            w.insert(w.end(), word.begin(), word.begin() + i);
            w.push_back(t.left);
            w.push_back(t.right);
            w.insert(w.end(), word.begin() + i + 1, word.end());
            long long parity = 1 + eps + sp.element(t.left).degree;
            uint32_t& slot = acc[std::move(w)];
            slot = fp_add(slot, with_parity(t.coeff, parity, p), p);
        }
        eps += sp.element(word[i]).degree - 1;
    }
    std::vector<WordCoeff> out;
    for (auto& [w, coeff] : acc)
        if (coeff != 0) out.push_back({w, coeff});
    return out;
}

std::vector<TwoSidedWordCoeff> two_sided_differential(const Comodule& m, const Coalgebra& c,
                                                      const Comodule& n, const TwoSidedWord& word) {
    if (m.side() != Comodule::Side::Right)
        fail(ErrorKind::BadInput, "left factor must be a right comodule");
    if (n.side() != Comodule::Side::Left)
        fail(ErrorKind::BadInput, "right factor must be a left comodule");
    const GradedSpace& sp = c.space();
    uint32_t p = c.prime();
    int m_deg = m.space().element(word.left).degree;
    std::map<TwoSidedWord, uint32_t> acc;
    auto put = [&](TwoSidedWord w, uint32_t coeff, long long parity) {
        uint32_t& slot = acc[std::move(w)];
        slot = fp_add(slot, with_parity(coeff, parity, p), p);
    };
    // left face: the new desuspension marker crosses m', and the -1 global
    // sign cancels the face's own -1, leaving (-1)^{|m'|}
    for (const CoactionTerm& t : m.coaction(word.left)) {
        Blocks w;
        w.reserve(word.blocks.size() + 1);
        w.push_back(t.coalg);
        w.insert(w.end(), word.blocks.begin(), word.blocks.end());
        put({t.module, std::move(w), word.right}, t.coeff,
            m.space().element(t.module).degree);
    }
    // block faces
    int eps = 0;
    for (size_t i = 0; i < word.blocks.size(); ++i) {
        for (const CoproductTerm& t : c.coproduct(word.blocks[i])) {
            Blocks w;
            w.reserve(word.blocks.size() + 1);
            w.insert(w.end(), word.blocks.begin(), word.blocks.begin() + i);
            w.push_back(t.left);
            w.push_back(t.right);
            w.insert(w.end(), word.blocks.begin() + i + 1, word.blocks.end());
            put({word.left, std::move(w), word.right}, t.coeff,
                1 + m_deg + eps + sp.element(t.left).degree);
        }
        eps += sp.element(word.blocks[i]).degree - 1;
    }
    // right face: the marker crosses m and every block on its way to the end
    for (const CoactionTerm& t : n.coaction(word.right)) {
        Blocks w = word.blocks;
        w.push_back(t.coalg);
        put({word.left, std::move(w), t.module}, t.coeff, 1 + m_deg + eps);
    }
    std::vector<TwoSidedWordCoeff> out;
    for (auto& [w, coeff] : acc)
        if (coeff != 0) out.push_back({w, coeff});
    return out;
}

std::string format_word(const Coalgebra& c, const Blocks& word) {
    std::string out = "[";
    for (size_t i = 0; i < word.size(); ++i) {
        if (i > 0) out += "|";
        out += c.space().element(word[i]).name;
    }
    return out + "]";
}

CobarComplex::CobarComplex(const Coalgebra& c, int max_s, int max_degree, int max_weight)
    : c_(&c), max_s_(max_s), max_degree_(max_degree), max_weight_(max_weight),
      empty_(0, 0, c.prime()) {
    if (max_s < 0 || max_degree < 0) fail(ErrorKind::BadInput, "cobar box must be nonnegative");
    const GradedSpace& sp = c.space();
    if (max_weight >= 0)
        for (int x = 0; x < sp.dim(); ++x)
            for (const CoproductTerm& t : c.coproduct(x))
                if (sp.element(t.left).weight + sp.element(t.right).weight !=
                    sp.element(x).weight)
                    fail(ErrorKind::BadInput,
                         "weight cap needs a weight-additive coproduct; '" +
                             sp.element(x).name + "' splits unevenly");
    auto cell_of = [&](int s, int t) -> Cell& {
        auto it = cells_.find({s, t});
        if (it == cells_.end()) it = cells_.emplace(std::make_pair(s, t), Cell(c.prime())).first;
        return it->second;
    };
    cell_of(0, 0).words.push_back({});
    Blocks current;
    auto grow = [&](auto&& self, int degree, int weight) -> void {
        if (static_cast<int>(current.size()) == max_s_ + 2) return;
        for (int x = 0; x < sp.dim(); ++x) {
            int nd = degree + sp.element(x).degree;
            if (nd > max_degree_) continue;
            int nw = weight + sp.element(x).weight;
            if (max_weight_ >= 0 && nw > max_weight_) continue;
            current.push_back(x);
            cell_of(static_cast<int>(current.size()), nd).words.push_back(current);
            self(self, nd, nw);
            current.pop_back();
        }
    };
    grow(grow, 0, 0);
    for (auto& [key, cell] : cells_)
        for (int i = 0; i < static_cast<int>(cell.words.size()); ++i)
            cell.index.emplace(cell.words[i], i);
    for (auto& [key, cell] : cells_) {
        auto [s, t] = key;
        if (s > max_s_ + 1) continue;
        const Cell* target = this->cell(s + 1, t);
        cell.d = FpMatrix(target ? static_cast<int>(target->words.size()) : 0,
                          static_cast<int>(cell.words.size()), c.prime());
        for (int col = 0; col < static_cast<int>(cell.words.size()); ++col)
            for (const WordCoeff& term : cobar_differential(c, cell.words[col])) {
                if (!target) fail(ErrorKind::Unreachable, "differential left the enumerated box");
                auto it = target->index.find(term.word);
                if (it == target->index.end())
                    fail(ErrorKind::Unreachable, "differential left the enumerated box");
                cell.d.add_at(it->second, col, term.coeff);
            }
    }
}

const CobarComplex::Cell* CobarComplex::cell(int s, int t) const {
    auto it = cells_.find({s, t});
    return it == cells_.end() ? nullptr : &it->second;
}

const std::vector<Blocks>& CobarComplex::words(int s, int t) const {
    const Cell* c = cell(s, t);
    return c ? c->words : no_words_;
}

int CobarComplex::word_index(int s, int t, const Blocks& word) const {
    const Cell* c = cell(s, t);
    if (!c) return -1;
    auto it = c->index.find(word);
    return it == c->index.end() ? -1 : it->second;
}

const FpMatrix& CobarComplex::differential(int s, int t) const {
    const Cell* c = cell(s, t);
    return c ? c->d : empty_;
}

int CobarComplex::word_weight(const Blocks& word) const {
    int w = 0;
    for (int x : word) w += c_->space().element(x).weight;
    return w;
}

DSquaredReport verify_d_squared(const CobarComplex& cx) {
    for (int s = 0; s <= cx.max_s(); ++s)
        for (int t = 0; t <= cx.max_degree(); ++t) {
            const FpMatrix& first = cx.differential(s, t);
            if (first.cols() == 0 || first.rows() == 0) continue;
            const FpMatrix& second = cx.differential(s + 1, t);
            if (second.rows() == 0) continue;
            FpMatrix square = second.times(first);
            for (int r = 0; r < square.rows(); ++r)
                for (int c = 0; c < square.cols(); ++c)
                    if (square.at(r, c) != 0)
                        return {false, "d^2" + format_word(cx.coalgebra(), cx.words(s, t)[c]) +
                                           " hits " +
                                           format_word(cx.coalgebra(), cx.words(s + 2, t)[r])};
        }
    return {true, ""};
}

CotorResult cotor(const Coalgebra& c, int max_s, int max_degree, const CotorOptions& opts) {
    if (max_s < 0 || max_degree < 0) fail(ErrorKind::BadInput, "cotor box must be nonnegative");
    CobarComplex cx(c, max_s, max_degree);
    CotorResult result;
    result.p = c.prime();
    result.max_s = max_s;
    result.max_degree = max_degree;
    result.complete_degree = std::min(c.complete_degree(), max_degree);
    result.truncated = c.complete_degree() < max_degree;

    struct Job {
        int s, t;
    };
    std::vector<Job> jobs;
    for (int s = 0; s <= max_s; ++s)
        for (int t = 0; t <= max_degree; ++t)
            if (!cx.words(s, t).empty()) jobs.push_back({s, t});
    std::vector<int> ranks(jobs.size());
    parallel_for(static_cast<int>(jobs.size()),
                 [&](int i) { ranks[i] = cx.differential(jobs[i].s, jobs[i].t).rank(); });
    std::map<std::pair<int, int>, int> rank_of;
    for (size_t i = 0; i < jobs.size(); ++i) rank_of[{jobs[i].s, jobs[i].t}] = ranks[i];
    auto rank_at = [&](int s, int t) {
        auto it = rank_of.find({s, t});
        return it == rank_of.end() ? 0 : it->second;
    };

    for (const Job& job : jobs) {
        int total = static_cast<int>(cx.words(job.s, job.t).size());
        int dim = total - rank_at(job.s, job.t) - rank_at(job.s - 1, job.t);
        if (dim <= 0) continue;
        CotorCell cell;
        cell.dim = dim;
        if (opts.representatives) {
            const FpMatrix& out = cx.differential(job.s, job.t);
            const FpMatrix& in = cx.differential(job.s - 1, job.t);
            RowSpace span(c.prime(), total);
            if (job.s > 0)
                for (int col = 0; col < in.cols(); ++col) {
                    std::vector<uint32_t> v(total);
                    for (int r = 0; r < total; ++r) v[r] = in.at(r, col);
                    span.insert(std::move(v));
                }
            for (const auto& kv : out.kernel_basis()) {
                std::vector<uint32_t> copy = kv;
                if (!span.insert(std::move(copy))) continue;
                std::string rep;
                for (int i = 0; i < total; ++i) {
                    if (kv[i] == 0) continue;
                    if (!rep.empty()) rep += " + ";
                    if (kv[i] != 1) rep += std::to_string(kv[i]) + "*";
                    rep += format_word(c, cx.words(job.s, job.t)[i]);
                }
                cell.representatives.push_back(std::move(rep));
            }
        }
        result.cells[{job.s, job.t}] = std::move(cell);
    }
    return result;
}

TwoSidedComplex::TwoSidedComplex(const Comodule& m, const Coalgebra& c, const Comodule& n,
                                 int max_s, int max_degree)
    : m_(&m), c_(&c), n_(&n), max_s_(max_s), max_degree_(max_degree), empty_(0, 0, c.prime()) {
    if (max_s < 0 || max_degree < 0) fail(ErrorKind::BadInput, "cobar box must be nonnegative");
    if (m.side() != Comodule::Side::Right)
        fail(ErrorKind::BadInput, "left factor must be a right comodule");
    if (n.side() != Comodule::Side::Left)
        fail(ErrorKind::BadInput, "right factor must be a left comodule");
    const GradedSpace& sp = c.space();
    auto cell_of = [&](int s, int t) -> Cell& {
        auto it = cells_.find({s, t});
        if (it == cells_.end()) it = cells_.emplace(std::make_pair(s, t), Cell(c.prime())).first;
        return it->second;
    };
    for (int mi = 0; mi < m.space().dim(); ++mi) {
        int base = m.space().element(mi).degree;
        Blocks current;
        auto emit = [&](int degree) {
            for (int ni = 0; ni < n.space().dim(); ++ni) {
                int t = degree + n.space().element(ni).degree;
                if (t > max_degree_) continue;
                cell_of(static_cast<int>(current.size()), t)
                    .words.push_back({mi, current, ni});
            }
        };
        emit(base);
        auto grow = [&](auto&& self, int degree) -> void {
            if (static_cast<int>(current.size()) == max_s_ + 2) return;
            for (int x = 0; x < sp.dim(); ++x) {
                int nd = degree + sp.element(x).degree;
                if (nd > max_degree_) continue;
                current.push_back(x);
                emit(nd);
                self(self, nd);
                current.pop_back();
            }
        };
        grow(grow, base);
    }
    for (auto& [key, cell] : cells_)
        for (int i = 0; i < static_cast<int>(cell.words.size()); ++i)
            cell.index.emplace(cell.words[i], i);
    for (auto& [key, cell] : cells_) {
        auto [s, t] = key;
        if (s > max_s_ + 1) continue;
        const Cell* target = this->cell(s + 1, t);
        cell.d = FpMatrix(target ? static_cast<int>(target->words.size()) : 0,
                          static_cast<int>(cell.words.size()), c.prime());
        for (int col = 0; col < static_cast<int>(cell.words.size()); ++col)
            for (const TwoSidedWordCoeff& term :
                 two_sided_differential(m, c, n, cell.words[col])) {
                if (!target) fail(ErrorKind::Unreachable, "differential left the enumerated box");
                auto it = target->index.find(term.word);
                if (it == target->index.end())
                    fail(ErrorKind::Unreachable, "differential left the enumerated box");
                cell.d.add_at(it->second, col, term.coeff);
            }
    }
}

const TwoSidedComplex::Cell* TwoSidedComplex::cell(int s, int t) const {
    auto it = cells_.find({s, t});
    return it == cells_.end() ? nullptr : &it->second;
}

const std::vector<TwoSidedWord>& TwoSidedComplex::words(int s, int t) const {
    const Cell* c = cell(s, t);
    return c ? c->words : no_words_;
}

const FpMatrix& TwoSidedComplex::differential(int s, int t) const {
    const Cell* c = cell(s, t);
    return c ? c->d : empty_;
}

std::string TwoSidedComplex::format(const TwoSidedWord& word) const {
    return m_->space().element(word.left).name + format_word(*c_, word.blocks) +
           n_->space().element(word.right).name;
}

DSquaredReport verify_d_squared(const TwoSidedComplex& cx) {
    for (int s = 0; s <= cx.max_s(); ++s)
        for (int t = 0; t <= cx.max_degree(); ++t) {
            const FpMatrix& first = cx.differential(s, t);
            if (first.cols() == 0 || first.rows() == 0) continue;
            const FpMatrix& second = cx.differential(s + 1, t);
            if (second.rows() == 0) continue;
            FpMatrix square = second.times(first);
            for (int r = 0; r < square.rows(); ++r)
                for (int c = 0; c < square.cols(); ++c)
                    if (square.at(r, c) != 0)
                        return {false, "d^2" + cx.format(cx.words(s, t)[c]) + " hits " +
                                           cx.format(cx.words(s + 2, t)[r])};
        }
    return {true, ""};
}

}  // namespace gravity
