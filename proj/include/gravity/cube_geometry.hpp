#pragma once

#include "gravity/rational.hpp"

#include <optional>
#include <vector>

namespace gravity {

struct Axis {
    Rational center;
    Rational radius;

    Rational left() const { return center - radius; }
    Rational right() const { return center + radius; }
};

// One little cube: an affine image of [-1,1]^n given per-axis by x -> center + radius*x.
struct LittleCube {
    std::vector<Axis> axes;

    int dim() const { return static_cast<int>(axes.size()); }
};

// A point of the little-cubes operad space: j cubes with disjoint open images
// inside [-1,1]^n.  Construct through validate_config.
class CubeConfig {
public:
    static CubeConfig validate_config(std::vector<LittleCube> cubes);

    int dim() const { return cubes_.empty() ? 0 : cubes_[0].dim(); }
    int size() const { return static_cast<int>(cubes_.size()); }
    const LittleCube& cube(int i) const { return cubes_[i]; }
    const std::vector<LittleCube>& cubes() const { return cubes_; }

private:
    explicit CubeConfig(std::vector<LittleCube> cubes) : cubes_(std::move(cubes)) {}

    std::vector<LittleCube> cubes_;
};

// Cube labels are 0-based here; error messages use the 1-based labels.
using Subset = std::vector<int>;

struct SubsetPartition {
    std::vector<Subset> parts;

    // Checks the parts are nonempty, disjoint, and cover {0,...,j-1}.
    static SubsetPartition validate(std::vector<Subset> parts, int j);
};

// Overlap of the point x with the first-axis image of b, from one side:
// 1 at the center, 0 outside the closed image, linear in between.
Rational overlap_d(const Rational& x, const Axis& b);

// Symmetrized first-axis overlap of two cubes.
Rational dis(const LittleCube& a, const LittleCube& b);

// A subset is stable when each member's first-axis center lies in the open
// first-axis image of every other member.
bool is_stable(const CubeConfig& cfg, const Subset& subset);

Rational OL(const CubeConfig& cfg, const Subset& subset);
Rational MOL(const CubeConfig& cfg, const SubsetPartition& partition);

// Largest s such that the cubes split into s mutually-overlapping piles;
// equals the clique cover number of the graph with edges {dis > 0}.
int gravity_degree(const CubeConfig& cfg);

// max over partitions into exactly s parts of MOL.
Rational u_value(const CubeConfig& cfg, int s);

// Minimum number of parts whose closed first-axis images share a common
// interior point within each part.
int skewer_degree(const CubeConfig& cfg);

Rational m_clamp(const Rational& t);

// The homotopy H(-, t): every first-axis radius scales by (1 - t), centers
// and other axes fixed.  Needs t in [0,1).
CubeConfig shrink_H(const CubeConfig& cfg, const Rational& t);

// Whether the union of closed first-axis images has at least s connected
// components (touching closed images count as separate components).
bool is_decomposable(const CubeConfig& cfg, int s);

int distinct_first_centers(const CubeConfig& cfg);

// Smallest t in [0,1) with shrink_H(cfg, t) decomposable into s pieces.
// Throws Unreachable when s exceeds the number of distinct first-axis centers.
Rational sigma(const CubeConfig& cfg, int s);

// Endpoint of the gravity deformation G(cfg, s, -) at time t: shrink by
// t*(u_s*sigma_s + (1-u_s)*sigma_{s+1}).  Needs gravity_degree(cfg) >= s.
CubeConfig deform_G(const CubeConfig& cfg, int s, const Rational& t);

}  // namespace gravity
