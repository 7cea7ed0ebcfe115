#pragma once

#include "gravity/fp.hpp"

#include <map>
#include <string>
#include <vector>

namespace gravity {

struct BasisElement {
    std::string name;
    int degree = 0;
    int weight = 1;
};

// Finite graded F_p vector space with a named basis.
class GradedSpace {
public:
    GradedSpace(uint32_t p, std::vector<BasisElement> basis);

    uint32_t prime() const { return p_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const BasisElement& element(int i) const { return basis_[i]; }
    const std::vector<BasisElement>& basis() const { return basis_; }

    // -1 when the name is absent.
    int find(const std::string& name) const;

    int max_degree() const;
    std::map<int, int> dims_by_degree() const;

private:
    uint32_t p_;
    std::vector<BasisElement> basis_;
    std::map<std::string, int> index_;
};

GradedSpace suspend(const GradedSpace& v, int k);
GradedSpace tensor(const GradedSpace& v, const GradedSpace& w);
GradedSpace tensor_power(const GradedSpace& v, int s);

// Sign of rearranging homogeneous factors u_0 ⊗ … ⊗ u_{k-1} so that slot i
// holds u_{slot_to_source[i]}; degs is indexed by source position.
int koszul_sign(const std::vector<int>& slot_to_source, const std::vector<int>& degs);

struct SignedShuffle {
    std::vector<int> slot_to_source;
    int sign;  // ±1
};

// All (i,j)-shuffles acting contravariantly (slot k reads source σ(k)), each
// with its Koszul sign for the given source degrees.
std::vector<SignedShuffle> shuffle_sum(int i, int j, const std::vector<int>& degs);

// Degree-homogeneous linear map between graded spaces, stored densely.
class GradedMap {
public:
    GradedMap(const GradedSpace& source, const GradedSpace& target, int shift);

    const GradedSpace& source() const { return source_; }
    const GradedSpace& target() const { return target_; }
    int shift() const { return shift_; }
    const FpMatrix& matrix() const { return entries_; }

    // Rejects entries between degrees not differing by the shift.
    void add(int target_index, int source_index, uint32_t coeff);

    GradedMap compose(const GradedMap& first) const;  // this ∘ first
    bool operator==(const GradedMap&) const = default;

private:
    GradedSpace source_;
    GradedSpace target_;
    int shift_;
    FpMatrix entries_;
};

// The operator s_{i,j} on the (i+j)-fold tensor power of v.
GradedMap shuffle_sum_map(const GradedSpace& v, int i, int j);

}  // namespace gravity
