#pragma once

#include "gravity/cobar.hpp"

namespace gravity {

// X = ⋁ S^{d_i}; H̃(ΣX) gets one generator of degree d_i + 1 per sphere.
struct SphereWedge {
    std::vector<int> dims;
};

struct PageBox {
    uint32_t p = 2;
    int max_s = 5;
    int max_degree = 20;
    int max_weight = 6;
};

// E¹ of the gravity spectral sequence for n = 2: the cobar complex of the
// tensor coalgebra T(H̃(ΣX)) inside the box.  Internal degree t is the plain
// word degree; the s desuspensions stay in the bidegree, so the total degree
// of a word at (-s, t) is t - s.
class GravityE1 {
public:
    GravityE1(const SphereWedge& x, const PageBox& box);

    // the complex points into the coalgebra member
    GravityE1(const GravityE1&) = delete;
    GravityE1& operator=(const GravityE1&) = delete;

    const PageBox& box() const { return box_; }
    const TensorCoalgebra& blocks() const { return tc_; }
    const CobarComplex& complex() const { return cx_; }

    // Words need s ≤ weight, so cells above max_weight are empty and the
    // per-weight complexes close inside the box.
    int internal_max_s() const { return box_.max_weight; }

    bool truncated() const { return tc_.coalgebra.complete_degree() < box_.max_degree; }
    int complete_degree() const {
        return std::min(tc_.coalgebra.complete_degree(), box_.max_degree);
    }

    // The geometric route: split each block by the signed (ℓ, j-ℓ)-shuffle
    // sums acting on its letters.
    std::vector<WordCoeff> d1_shuffle(const Blocks& word) const;

    // The algebraic route: the cobar differential of the unshuffle coalgebra.
    std::vector<WordCoeff> d1_cobar(const Blocks& word) const;

    FpMatrix shuffle_matrix(int s, int t) const;

private:
    PageBox box_;
    TensorCoalgebra tc_;
    CobarComplex cx_;
};

struct CompareReport {
    bool equal;
    std::string witness;  // empty when equal
};

// Matrix equality of the two d¹ routes at every bidegree.
CompareReport compare_d1(const GravityE1& e1);

using DimTable = std::map<std::pair<int, int>, int>;  // (s,t) -> dim, zeros omitted

struct BigradedPage {
    PageBox box;
    bool truncated;
    int complete_degree;
    DimTable e1;
    DimTable e2;
    std::map<int, DimTable> e1_weights;
    std::map<int, DimTable> e2_weights;
};

BigradedPage compute_E2(const GravityE1& e1);

// The direct-sum decomposition by Snaith weight; per-weight tables are exact
// even when the combined page is truncated.
std::map<int, BigradedPage> weight_split(const BigradedPage& page);

}  // namespace gravity
