#include "gravity/cube_geometry.hpp"

#include "gravity/errors.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

namespace gravity {

namespace {

std::string cube_label(int i) { return "cube " + std::to_string(i + 1); }

// Minimum number of cliques covering all vertices of adj.  Exhaustive
// branch-and-bound, lowest label first, so the result is schedule-independent.
struct CliqueCoverSearch {
    const std::vector<std::vector<bool>>& adj;
    int j;
    int best;
    std::vector<std::vector<int>> cliques;

    explicit CliqueCoverSearch(const std::vector<std::vector<bool>>& adj_)
        : adj(adj_), j(static_cast<int>(adj_.size())), best(j) {}

    void run(int v) {
        if (static_cast<int>(cliques.size()) >= best) return;
        if (v == j) {
            best = static_cast<int>(cliques.size());
            return;
        }
        // index access: the recursive call may grow and reallocate cliques
        for (size_t i = 0; i < cliques.size(); ++i) {
            bool compatible = true;
            for (int w : cliques[i])
                if (!adj[v][w]) {
                    compatible = false;
                    break;
                }
            if (compatible) {
                cliques[i].push_back(v);
                run(v + 1);
                cliques[i].pop_back();
            }
        }
        if (static_cast<int>(cliques.size()) + 1 < best) {
            cliques.push_back({v});
            run(v + 1);
            cliques.pop_back();
        }
    }
};

int clique_cover_number(const std::vector<std::vector<bool>>& adj) {
    if (adj.empty()) return 0;
    CliqueCoverSearch search(adj);
    search.run(0);
    return search.best;
}

std::vector<std::vector<bool>> dis_threshold_graph(const CubeConfig& cfg, const Rational& theta) {
    int j = cfg.size();
    std::vector<std::vector<bool>> adj(j, std::vector<bool>(j, false));
    for (int i = 0; i < j; ++i)
        for (int k = i + 1; k < j; ++k)
            if (dis(cfg.cube(i), cfg.cube(k)) >= theta) adj[i][k] = adj[k][i] = true;
    return adj;
}

std::vector<std::vector<bool>> dis_positive_graph(const CubeConfig& cfg) {
    int j = cfg.size();
    std::vector<std::vector<bool>> adj(j, std::vector<bool>(j, false));
    for (int i = 0; i < j; ++i)
        for (int k = i + 1; k < j; ++k)
            if (dis(cfg.cube(i), cfg.cube(k)) > 0) adj[i][k] = adj[k][i] = true;
    return adj;
}

// Number of connected components of the union of closed intervals; intervals
// that merely touch stay in different components.
int component_count(std::vector<std::pair<Rational, Rational>> intervals) {
    std::sort(intervals.begin(), intervals.end());
    int count = 0;
    Rational reach;
    for (const auto& [left, right] : intervals) {
        if (count == 0 || left >= reach) {
            ++count;
            reach = right;
        } else {
            reach = std::max(reach, right);
        }
    }
    return count;
}

std::vector<std::pair<Rational, Rational>> first_axis_intervals(const CubeConfig& cfg,
                                                                const Rational& shrink) {
    std::vector<std::pair<Rational, Rational>> intervals;
    intervals.reserve(cfg.size());
    for (const auto& cube : cfg.cubes()) {
        Rational r = cube.axes[0].radius * (1 - shrink);
        intervals.emplace_back(cube.axes[0].center - r, cube.axes[0].center + r);
    }
    return intervals;
}

}  // namespace

CubeConfig CubeConfig::validate_config(std::vector<LittleCube> cubes) {
    if (cubes.empty()) fail(ErrorKind::BadInput, "config needs at least one cube");
    int n = cubes[0].dim();
    if (n < 1) fail(ErrorKind::BadInput, "cube 1 has no axes");
    for (int i = 0; i < static_cast<int>(cubes.size()); ++i) {
        if (cubes[i].dim() != n)
            fail(ErrorKind::BadInput, cube_label(i) + " has " + std::to_string(cubes[i].dim()) +
                                          " axes, expected " + std::to_string(n));
        for (int a = 0; a < n; ++a) {
            const Axis& axis = cubes[i].axes[a];
            if (axis.radius <= 0)
                fail(ErrorKind::OutOfBounds,
                     cube_label(i) + " axis " + std::to_string(a + 1) + " has nonpositive radius");
            if (abs_rat(axis.center) + axis.radius > 1)
                fail(ErrorKind::OutOfBounds,
                     cube_label(i) + " axis " + std::to_string(a + 1) + " leaves [-1,1]");
        }
    }
    for (int i = 0; i < static_cast<int>(cubes.size()); ++i)
        for (int k = i + 1; k < static_cast<int>(cubes.size()); ++k) {
            bool separated = false;
            for (int a = 0; a < n && !separated; ++a)
                separated = abs_rat(cubes[i].axes[a].center - cubes[k].axes[a].center) >=
                            cubes[i].axes[a].radius + cubes[k].axes[a].radius;
            if (!separated)
                fail(ErrorKind::NonDisjoint, cube_label(i) + " and " + cube_label(k) + " overlap");
        }
    return CubeConfig(std::move(cubes));
}

SubsetPartition SubsetPartition::validate(std::vector<Subset> parts, int j) {
    std::vector<bool> seen(j, false);
    for (const auto& part : parts) {
        if (part.empty()) fail(ErrorKind::EmptySubset, "partition contains an empty part");
        for (int label : part) {
            if (label < 0 || label >= j)
                fail(ErrorKind::OutOfRange, "label " + std::to_string(label + 1) + " out of range");
            if (seen[label])
                fail(ErrorKind::BadPartition, "label " + std::to_string(label + 1) + " repeated");
            seen[label] = true;
        }
    }
    for (int label = 0; label < j; ++label)
        if (!seen[label])
            fail(ErrorKind::BadPartition, "label " + std::to_string(label + 1) + " missing");
    return SubsetPartition{std::move(parts)};
}

Rational overlap_d(const Rational& x, const Axis& b) {
    if (b.radius <= 0) fail(ErrorKind::OutOfRange, "axis has nonpositive radius");
    Rational twoR = 2 * b.radius;
    Rational spread = abs_rat(abs_rat(b.center + b.radius - x) - abs_rat(b.center - b.radius - x));
    return (twoR - spread) / twoR;
}

Rational dis(const LittleCube& a, const LittleCube& b) {
    if (a.axes.empty() || b.axes.empty()) fail(ErrorKind::BadInput, "cube has no axes");
    return std::min(overlap_d(a.axes[0].center, b.axes[0]), overlap_d(b.axes[0].center, a.axes[0]));
}

bool is_stable(const CubeConfig& cfg, const Subset& subset) {
    if (subset.empty()) fail(ErrorKind::EmptySubset, "stability of an empty subset");
    for (int label : subset)
        if (label < 0 || label >= cfg.size())
            fail(ErrorKind::OutOfRange, "label " + std::to_string(label + 1) + " out of range");
    for (int i : subset)
        for (int k : subset) {
            if (i == k) continue;
            const Axis& image = cfg.cube(k).axes[0];
            if (abs_rat(cfg.cube(i).axes[0].center - image.center) >= image.radius) return false;
        }
    return true;
}

Rational OL(const CubeConfig& cfg, const Subset& subset) {
    if (subset.empty()) fail(ErrorKind::EmptySubset, "OL of an empty subset");
    Rational best = 1;
    for (size_t i = 0; i < subset.size(); ++i)
        for (size_t k = i + 1; k < subset.size(); ++k)
            best = std::min(best, dis(cfg.cube(subset[i]), cfg.cube(subset[k])));
    return best;
}

Rational MOL(const CubeConfig& cfg, const SubsetPartition& partition) {
    if (partition.parts.empty()) fail(ErrorKind::EmptySubset, "MOL of an empty partition");
    Rational best = 1;
    for (const auto& part : partition.parts) best = std::min(best, OL(cfg, part));
    return best;
}

int gravity_degree(const CubeConfig& cfg) {
    return clique_cover_number(dis_positive_graph(cfg));
}

Rational u_value(const CubeConfig& cfg, int s) {
    if (s < 1 || s > cfg.size())
        fail(ErrorKind::BadS, "s = " + std::to_string(s) + " outside 1.." + std::to_string(cfg.size()));
    std::set<Rational> thresholds;
    thresholds.insert(1);
    for (int i = 0; i < cfg.size(); ++i)
        for (int k = i + 1; k < cfg.size(); ++k) {
            Rational d = dis(cfg.cube(i), cfg.cube(k));
            if (d > 0) thresholds.insert(d);
        }
    for (auto it = thresholds.rbegin(); it != thresholds.rend(); ++it)
        if (clique_cover_number(dis_threshold_graph(cfg, *it)) <= s) return *it;
    return 0;
}

int skewer_degree(const CubeConfig& cfg) {
    std::vector<std::pair<Rational, Rational>> intervals;  // (right, left), sorted by right end
    for (const auto& cube : cfg.cubes())
        intervals.emplace_back(cube.axes[0].right(), cube.axes[0].left());
    std::sort(intervals.begin(), intervals.end());
    int count = 0;
    size_t i = 0;
    while (i < intervals.size()) {
        ++count;
        Rational pick = intervals[i].first;
        while (i < intervals.size() && intervals[i].second < pick) ++i;
    }
    return count;
}

Rational m_clamp(const Rational& t) {
    if (t < 0 || t > 1) fail(ErrorKind::OutOfRange, "m_clamp needs t in [0,1]");
    return std::min(Rational(2) * t, Rational(1));
}

CubeConfig shrink_H(const CubeConfig& cfg, const Rational& t) {
    if (t < 0 || t >= 1) fail(ErrorKind::OutOfRange, "shrink_H needs t in [0,1)");
    std::vector<LittleCube> cubes = cfg.cubes();
    for (auto& cube : cubes) cube.axes[0].radius *= (1 - t);
    return CubeConfig::validate_config(std::move(cubes));
}

bool is_decomposable(const CubeConfig& cfg, int s) {
    if (s < 1 || s > cfg.size())
        fail(ErrorKind::BadS, "s = " + std::to_string(s) + " outside 1.." + std::to_string(cfg.size()));
    return component_count(first_axis_intervals(cfg, 0)) >= s;
}

int distinct_first_centers(const CubeConfig& cfg) {
    std::set<Rational> centers;
    for (const auto& cube : cfg.cubes()) centers.insert(cube.axes[0].center);
    return static_cast<int>(centers.size());
}

Rational sigma(const CubeConfig& cfg, int s) {
    if (s < 1) fail(ErrorKind::BadS, "s must be positive");
    if (s == 1) return 0;
    if (s > distinct_first_centers(cfg))
        fail(ErrorKind::Unreachable,
             "sigma_" + std::to_string(s) + " needs " + std::to_string(s) +
                 " distinct first-axis centers, have " + std::to_string(distinct_first_centers(cfg)));
    std::set<Rational> candidates;
    candidates.insert(0);
    for (int i = 0; i < cfg.size(); ++i)
        for (int k = i + 1; k < cfg.size(); ++k) {
            const Axis& a = cfg.cube(i).axes[0];
            const Axis& b = cfg.cube(k).axes[0];
            Rational gap = abs_rat(a.center - b.center);
            if (gap > 0 && gap < a.radius + b.radius) candidates.insert(1 - gap / (a.radius + b.radius));
        }
    for (const Rational& t : candidates)
        if (component_count(first_axis_intervals(cfg, t)) >= s) return t;
    fail(ErrorKind::Unreachable, "no separation event reached " + std::to_string(s) + " components");
}

CubeConfig deform_G(const CubeConfig& cfg, int s, const Rational& t) {
    if (t < 0 || t > 1) fail(ErrorKind::OutOfRange, "deform_G needs t in [0,1]");
    Rational u = u_value(cfg, s);
    Rational shrink;
    if (u == 1) {
        shrink = sigma(cfg, s);
    } else {
        // u < 1 forces more than s distinct centers, so both sigmas exist.
        shrink = u * sigma(cfg, s) + (1 - u) * sigma(cfg, s + 1);
    }
    return shrink_H(cfg, t * shrink);
}

}  // namespace gravity
