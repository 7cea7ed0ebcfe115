#include "gravity/graded.hpp"

#include "gravity/errors.hpp"

#include <algorithm>

namespace gravity {

GradedSpace::GradedSpace(uint32_t p, std::vector<BasisElement> basis)
    : p_(p), basis_(std::move(basis)) {
    require_prime(p);
    for (int i = 0; i < static_cast<int>(basis_.size()); ++i) {
        const BasisElement& e = basis_[i];
        if (e.name.empty()) fail(ErrorKind::BadInput, "basis element without a name");
        if (e.degree < 0) fail(ErrorKind::NegativeDegree, "'" + e.name + "' has negative degree");
        if (!index_.emplace(e.name, i).second)
            fail(ErrorKind::BadInput, "duplicate basis name '" + e.name + "'");
    }
}

int GradedSpace::find(const std::string& name) const {
    auto it = index_.find(name);
    return it == index_.end() ? -1 : it->second;
}

int GradedSpace::max_degree() const {
    int m = 0;
    for (const auto& e : basis_) m = std::max(m, e.degree);
    return m;
}

std::map<int, int> GradedSpace::dims_by_degree() const {
    std::map<int, int> dims;
    for (const auto& e : basis_) ++dims[e.degree];
    return dims;
}

GradedSpace suspend(const GradedSpace& v, int k) {
    std::vector<BasisElement> basis;
    basis.reserve(v.dim());
    for (const auto& e : v.basis()) {
        if (e.degree + k < 0)
            fail(ErrorKind::NegativeDegree,
                 "suspending '" + e.name + "' by " + std::to_string(k) + " goes negative");
        std::string name = k == 0 ? e.name : "S^" + std::to_string(k) + "(" + e.name + ")";
        basis.push_back({std::move(name), e.degree + k, e.weight});
    }
    return GradedSpace(v.prime(), std::move(basis));
}

GradedSpace tensor(const GradedSpace& v, const GradedSpace& w) {
    if (v.prime() != w.prime()) fail(ErrorKind::PrimeMismatch, "tensor over different primes");
    std::vector<BasisElement> basis;
    basis.reserve(static_cast<size_t>(v.dim()) * w.dim());
    for (const auto& a : v.basis())
        for (const auto& b : w.basis())
            basis.push_back({"(" + a.name + "|" + b.name + ")", a.degree + b.degree,
                             a.weight + b.weight});
    return GradedSpace(v.prime(), std::move(basis));
}

GradedSpace tensor_power(const GradedSpace& v, int s) {
    if (s < 1) fail(ErrorKind::BadInput, "tensor power needs s >= 1");
    GradedSpace out = v;
    for (int i = 1; i < s; ++i) out = tensor(out, v);
    return out;
}

int koszul_sign(const std::vector<int>& slot_to_source, const std::vector<int>& degs) {
    int k = static_cast<int>(slot_to_source.size());
    if (degs.size() != slot_to_source.size())
        fail(ErrorKind::BadInput, "degree list does not match permutation size");
    std::vector<bool> seen(k, false);
    for (int s : slot_to_source) {
        if (s < 0 || s >= k || seen[s]) fail(ErrorKind::BadInput, "not a permutation");
        seen[s] = true;
    }
    long long parity = 0;
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
            if (slot_to_source[a] > slot_to_source[b])
                parity += static_cast<long long>(degs[slot_to_source[a]]) * degs[slot_to_source[b]];
    return parity % 2 == 0 ? 1 : -1;
}

std::vector<SignedShuffle> shuffle_sum(int i, int j, const std::vector<int>& degs) {
    if (i < 1 || j < 1) fail(ErrorKind::BadInput, "shuffle_sum needs i, j >= 1");
    if (static_cast<int>(degs.size()) != i + j)
        fail(ErrorKind::BadInput, "shuffle_sum needs i+j degrees");
    std::vector<SignedShuffle> out;
    std::vector<int> pick(i);
    for (int a = 0; a < i; ++a) pick[a] = a;
    while (true) {
        std::vector<int> perm;
        perm.reserve(i + j);
        std::vector<bool> in_first(i + j, false);
        for (int a : pick) in_first[a] = true;
        for (int a : pick) perm.push_back(a);
        for (int a = 0; a < i + j; ++a)
            if (!in_first[a]) perm.push_back(a);
        int sign = koszul_sign(perm, degs);
        out.push_back({std::move(perm), sign});
        // next i-combination of {0..i+j-1} in lexicographic order
        int pos = i - 1;
        while (pos >= 0 && pick[pos] == i + j - i + pos) --pos;
        if (pos < 0) break;
        ++pick[pos];
        for (int a = pos + 1; a < i; ++a) pick[a] = pick[a - 1] + 1;
    }
    return out;
}

GradedMap::GradedMap(const GradedSpace& source, const GradedSpace& target, int shift)
    : source_(source), target_(target), shift_(shift),
      entries_(target.dim(), source.dim(), source.prime()) {
    if (source.prime() != target.prime()) fail(ErrorKind::PrimeMismatch, "map over different primes");
}

void GradedMap::add(int target_index, int source_index, uint32_t coeff) {
    if (target_.element(target_index).degree != source_.element(source_index).degree + shift_)
        fail(ErrorKind::DegreeMismatch,
             "entry " + target_.element(target_index).name + " <- " +
                 source_.element(source_index).name + " breaks the shift");
    entries_.add_at(target_index, source_index, coeff);
}

GradedMap GradedMap::compose(const GradedMap& first) const {
    GradedMap out(first.source_, target_, shift_ + first.shift_);
    out.entries_ = entries_.times(first.entries_);
    return out;
}

GradedMap shuffle_sum_map(const GradedSpace& v, int i, int j) {
    GradedSpace pow = tensor_power(v, i + j);
    GradedMap out(pow, pow, 0);
    int n = v.dim();
    int k = i + j;
    // words of pow are mixed-radix over v's basis, last factor fastest
    std::vector<int> word(k, 0);
    int total = pow.dim();
    for (int idx = 0; idx < total; ++idx) {
        int rem = idx;
        for (int a = k - 1; a >= 0; --a) {
            word[a] = rem % n;
            rem /= n;
        }
        std::vector<int> degs(k);
        for (int a = 0; a < k; ++a) degs[a] = v.element(word[a]).degree;
        for (const auto& sh : shuffle_sum(i, j, degs)) {
            int target = 0;
            for (int a = 0; a < k; ++a) target = target * n + word[sh.slot_to_source[a]];
            out.add(target, idx, fp_from_int(sh.sign, v.prime()));
        }
    }
    return out;
}

}  // namespace gravity
