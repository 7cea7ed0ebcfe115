#include "gravity/coalgebra.hpp"

#include "gravity/errors.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace gravity {

namespace {

std::vector<CoproductTerm> normalize_terms(std::vector<CoproductTerm> terms, uint32_t p) {
    std::map<std::pair<int, int>, uint32_t> acc;
    for (const auto& t : terms) {
        uint32_t& c = acc[{t.left, t.right}];
        c = fp_add(c, t.coeff % p, p);
    }
    std::vector<CoproductTerm> out;
    for (const auto& [key, coeff] : acc)
        if (coeff != 0) out.push_back({key.first, key.second, coeff});
    return out;
}

}  // namespace

Coalgebra Coalgebra::from_table(GradedSpace cbar, std::vector<std::vector<CoproductTerm>> delta,
                                int complete_degree) {
    uint32_t p = cbar.prime();
    if (static_cast<int>(delta.size()) != cbar.dim())
        fail(ErrorKind::BadInput, "coproduct table size does not match basis");
    for (const auto& e : cbar.basis())
        if (e.degree == 0)
            fail(ErrorKind::BadCounit,
                 "'" + e.name + "' has degree 0; the counit element must stay implicit");
    for (int x = 0; x < cbar.dim(); ++x) {
        delta[x] = normalize_terms(std::move(delta[x]), p);
        for (const auto& t : delta[x]) {
            if (t.left < 0 || t.left >= cbar.dim() || t.right < 0 || t.right >= cbar.dim())
                fail(ErrorKind::BadInput, "coproduct of '" + cbar.element(x).name +
                                              "' references an unknown element");
            if (cbar.element(t.left).degree + cbar.element(t.right).degree !=
                cbar.element(x).degree)
                fail(ErrorKind::DegreeMismatch,
                     "coproduct of '" + cbar.element(x).name + "' has term " +
                         cbar.element(t.left).name + " ⊗ " + cbar.element(t.right).name +
                         " of the wrong degree");
        }
    }
    // (Δ̄⊗1)Δ̄ = (1⊗Δ̄)Δ̄, checked on every basis element.
    for (int x = 0; x < cbar.dim(); ++x) {
        std::map<std::tuple<int, int, int>, uint32_t> lhs, rhs;
        for (const auto& t : delta[x])
            for (const auto& u : delta[t.left]) {
                uint32_t& c = lhs[{u.left, u.right, t.right}];
                c = fp_add(c, fp_mul(t.coeff, u.coeff, p), p);
            }
        for (const auto& t : delta[x])
            for (const auto& u : delta[t.right]) {
                uint32_t& c = rhs[{t.left, u.left, u.right}];
                c = fp_add(c, fp_mul(t.coeff, u.coeff, p), p);
            }
        for (const auto& [key, coeff] : rhs) {
            uint32_t& c = lhs[key];
            c = fp_sub(c, coeff, p);
        }
        for (const auto& [key, coeff] : lhs)
            if (coeff != 0)
                fail(ErrorKind::NotCoassociative,
                     "'" + cbar.element(x).name + "' fails at " +
                         cbar.element(std::get<0>(key)).name + " ⊗ " +
                         cbar.element(std::get<1>(key)).name + " ⊗ " +
                         cbar.element(std::get<2>(key)).name);
    }
    return Coalgebra(std::move(cbar), std::move(delta), complete_degree);
}

int TensorCoalgebra::word_index(const std::vector<int>& word_letters) const {
    auto it = std::lower_bound(order.begin(), order.end(), word_letters,
                               [this](int lhs, const std::vector<int>& rhs) {
                                   return letters[lhs] < rhs;
                               });
    return it == order.end() || letters[*it] != word_letters ? -1 : *it;
}

TensorCoalgebra tensor_algebra(const GradedSpace& v, int max_weight, int max_degree) {
    if (max_weight < 1 || max_degree < 1)
        fail(ErrorKind::BadInput, "tensor_algebra needs positive bounds");
    for (const auto& e : v.basis())
        if (e.degree < 1)
            fail(ErrorKind::BadInput,
                 "generator '" + e.name + "' must have positive degree for a locally finite T(V)");
    bool single_char = true;
    for (const auto& e : v.basis()) single_char = single_char && e.name.size() == 1;

    struct Word {
        std::vector<int> letters;
        int degree;
        int weight;
    };
    std::vector<Word> words;
    std::vector<int> current;
    auto grow = [&](auto&& self, int degree, int weight) -> void {
        if (!current.empty()) words.push_back({current, degree, weight});
        if (static_cast<int>(current.size()) == max_weight) return;
        for (int g = 0; g < v.dim(); ++g) {
            if (degree + v.element(g).degree > max_degree) continue;
            current.push_back(g);
            self(self, degree + v.element(g).degree, weight + v.element(g).weight);
            current.pop_back();
        }
    };
    grow(grow, 0, 0);
    std::sort(words.begin(), words.end(), [](const Word& a, const Word& b) {
        return std::tie(a.degree, a.weight, a.letters) < std::tie(b.degree, b.weight, b.letters);
    });

    std::vector<BasisElement> basis;
    std::vector<std::vector<int>> letters;
    basis.reserve(words.size());
    for (const auto& w : words) {
        std::string name;
        for (size_t i = 0; i < w.letters.size(); ++i) {
            if (i > 0 && !single_char) name += "*";
            name += v.element(w.letters[i]).name;
        }
        basis.push_back({std::move(name), w.degree, w.weight});
        letters.push_back(w.letters);
    }
    GradedSpace cbar(v.prime(), std::move(basis));

    std::vector<int> order(letters.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return letters[a] < letters[b]; });

    auto find_word = [&](const std::vector<int>& w) -> int {
        auto it = std::lower_bound(order.begin(), order.end(), w,
                                   [&](int lhs, const std::vector<int>& rhs) {
                                       return letters[lhs] < rhs;
                                   });
        return it == order.end() || letters[*it] != w ? -1 : *it;
    };

    std::vector<std::vector<CoproductTerm>> delta(letters.size());
    for (size_t x = 0; x < letters.size(); ++x) {
        const std::vector<int>& w = letters[x];
        int k = static_cast<int>(w.size());
        if (k < 2) continue;
        std::vector<int> degs(k);
        for (int i = 0; i < k; ++i) degs[i] = v.element(w[i]).degree;
        for (unsigned mask = 1; mask + 1 < (1u << k); ++mask) {
            std::vector<int> left_word, right_word, perm;
            for (int i = 0; i < k; ++i)
                if (mask & (1u << i)) {
                    left_word.push_back(w[i]);
                    perm.push_back(i);
                }
            for (int i = 0; i < k; ++i)
                if (!(mask & (1u << i))) {
                    right_word.push_back(w[i]);
                    perm.push_back(i);
                }
            int sign = koszul_sign(perm, degs);
            int li = find_word(left_word);
            int ri = find_word(right_word);
            // Subwords shrink weight and degree, so they are always in the box.
            if (li < 0 || ri < 0) fail(ErrorKind::Unreachable, "subword fell outside the box");
            delta[x].push_back({li, ri, fp_from_int(sign, v.prime())});
        }
    }
    // Words missing only for the weight cap have degree at least
    // min_deg * (max_weight + 1); everything below is fully enumerated.
    int complete = max_degree;
    if (v.dim() > 0) {
        int min_deg = v.element(0).degree;
        for (const auto& e : v.basis()) min_deg = std::min(min_deg, e.degree);
        complete = std::min(max_degree, min_deg * (max_weight + 1) - 1);
    }
    return TensorCoalgebra{Coalgebra::from_table(std::move(cbar), std::move(delta), complete), v,
                           std::move(letters), std::move(order)};
}

Comodule Comodule::trivial(const Coalgebra& c, Side side) {
    GradedSpace m(c.prime(), {{"1", 0, 0}});
    return Comodule(std::move(m), side, {{}});
}

Comodule Comodule::from_table(const Coalgebra& c, GradedSpace m, Side side,
                              std::vector<std::vector<CoactionTerm>> rho) {
    uint32_t p = c.prime();
    if (m.prime() != p) fail(ErrorKind::PrimeMismatch, "comodule over a different prime");
    if (static_cast<int>(rho.size()) != m.dim())
        fail(ErrorKind::BadInput, "coaction table size does not match basis");
    for (int x = 0; x < m.dim(); ++x) {
        std::map<std::pair<int, int>, uint32_t> acc;
        for (const auto& t : rho[x]) {
            if (t.coalg < 0 || t.coalg >= c.space().dim() || t.module < 0 || t.module >= m.dim())
                fail(ErrorKind::BadInput,
                     "coaction of '" + m.element(x).name + "' references an unknown element");
            uint32_t& v = acc[{t.coalg, t.module}];
            v = fp_add(v, t.coeff % p, p);
        }
        rho[x].clear();
        for (const auto& [key, coeff] : acc) {
            if (coeff == 0) continue;
            if (c.space().element(key.first).degree + m.element(key.second).degree !=
                m.element(x).degree)
                fail(ErrorKind::DegreeMismatch, "coaction of '" + m.element(x).name +
                                                    "' has a term of the wrong degree");
            rho[x].push_back({key.first, key.second, coeff});
        }
    }
    // Right: (ρ̄⊗1)ρ̄ = (1⊗Δ̄)ρ̄ on M⊗C̄⊗C̄, read as (module, inner, outer).
    // Left: (1⊗λ̄)λ̄ = (Δ̄⊗1)λ̄ on C̄⊗C̄⊗M.
    for (int x = 0; x < m.dim(); ++x) {
        std::map<std::tuple<int, int, int>, uint32_t> lhs, rhs;
        for (const auto& t : rho[x])
            for (const auto& u : rho[t.module]) {
                uint32_t& v = lhs[{u.module, u.coalg, t.coalg}];
                v = fp_add(v, fp_mul(t.coeff, u.coeff, p), p);
            }
        for (const auto& t : rho[x])
            for (const auto& u : c.coproduct(t.coalg)) {
                int inner = side == Side::Right ? u.left : u.right;
                int outer = side == Side::Right ? u.right : u.left;
                uint32_t& v = rhs[{t.module, inner, outer}];
                v = fp_add(v, fp_mul(t.coeff, u.coeff, p), p);
            }
        for (const auto& [key, coeff] : rhs) {
            uint32_t& v = lhs[key];
            v = fp_sub(v, coeff, p);
        }
        for (const auto& [key, coeff] : lhs)
            if (coeff != 0)
                fail(ErrorKind::NotCoassociative,
                     "coaction of '" + m.element(x).name + "' fails coassociativity at " +
                         m.element(std::get<0>(key)).name + ", " +
                         c.space().element(std::get<1>(key)).name + ", " +
                         c.space().element(std::get<2>(key)).name);
    }
    return Comodule(std::move(m), side, std::move(rho));
}

}  // namespace gravity
