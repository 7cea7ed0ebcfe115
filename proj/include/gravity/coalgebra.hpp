#pragma once

#include "gravity/graded.hpp"

#include <climits>
#include <vector>

namespace gravity {

// One term a ⊗ b of a reduced coproduct, with indices into the C̄ basis.
struct CoproductTerm {
    int left;
    int right;
    uint32_t coeff;

    auto operator<=>(const CoproductTerm&) const = default;
};

// Graded coalgebra stored in reduced form: the basis spans C̄ = ker(counit),
// the degree-0 unit is implicit, and Δ̄(x) = Δ(x) - x⊗1 - 1⊗x.
class Coalgebra {
public:
    // Validates degree additivity and coassociativity of the table.
    static Coalgebra from_table(GradedSpace cbar, std::vector<std::vector<CoproductTerm>> delta,
                                int complete_degree = INT_MAX);

    const GradedSpace& space() const { return cbar_; }
    uint32_t prime() const { return cbar_.prime(); }
    const std::vector<CoproductTerm>& coproduct(int i) const { return delta_[i]; }

    // Degrees up to which the basis agrees with the untruncated coalgebra.
    int complete_degree() const { return complete_degree_; }

private:
    Coalgebra(GradedSpace cbar, std::vector<std::vector<CoproductTerm>> delta, int complete_degree)
        : cbar_(std::move(cbar)), delta_(std::move(delta)), complete_degree_(complete_degree) {}

    GradedSpace cbar_;
    std::vector<std::vector<CoproductTerm>> delta_;
    int complete_degree_;
};

// T(V) for positively graded V, truncated to words of weight ≤ maxWeight and
// degree ≤ maxDegree, with the unshuffle coproduct.  The truncation is a
// subcoalgebra (splitting a word shrinks both weight and degree), so the
// table is closed and exactly coassociative.
struct TensorCoalgebra {
    Coalgebra coalgebra;
    GradedSpace generators;
    std::vector<std::vector<int>> letters;  // per word, generator indices in order
    std::vector<int> order;                 // word indices sorted by letter sequence

    // -1 when the word is not in the box.
    int word_index(const std::vector<int>& word_letters) const;
};

TensorCoalgebra tensor_algebra(const GradedSpace& v, int max_weight, int max_degree);

struct CoactionTerm {
    int coalg;   // index into C̄
    int module;  // index into M
    uint32_t coeff;

    auto operator<=>(const CoactionTerm&) const = default;
};

// Comodule in reduced form: the coaction table lists only the C̄ part,
// ρ(m) = m⊗1 + Σ m'⊗c (right) or λ(m) = 1⊗m + Σ c⊗m' (left).
class Comodule {
public:
    enum class Side { Left, Right };

    static Comodule trivial(const Coalgebra& c, Side side);
    static Comodule from_table(const Coalgebra& c, GradedSpace m, Side side,
                               std::vector<std::vector<CoactionTerm>> rho);

    const GradedSpace& space() const { return m_; }
    Side side() const { return side_; }
    const std::vector<CoactionTerm>& coaction(int i) const { return rho_[i]; }

private:
    Comodule(GradedSpace m, Side side, std::vector<std::vector<CoactionTerm>> rho)
        : m_(std::move(m)), side_(side), rho_(std::move(rho)) {}

    GradedSpace m_;
    Side side_;
    std::vector<std::vector<CoactionTerm>> rho_;
};

}  // namespace gravity
