#pragma once

#include <array>
#include <limits>
#include <string>
#include <vector>

#include "hkgic/miterms.hpp"
#include "hkgic/model.hpp"
#include "hkgic/polytope.hpp"
#include "hkgic/region2d.hpp"

namespace hkgic {

/// Coordinate names of the layer-rate space, in polytope column order.
inline const std::array<std::string, 4> kLayerCoords{"ru1", "ru2", "rv1", "rv2"};

/// Coefficient pattern (over ru1, ru2, rv1, rv2) of HK constraint `term` (1..14).
std::array<double, 4> hk_row_pattern(std::size_t term);

/// One channel and power split together with its 18-row HK polytope:
/// rows 0..13 are the rate constraints in order, rows 14..17 nonnegativity.
struct HkInstance {
    GicChannel channel;
    PowerSplit split;
    HkBounds bounds;
    RatePolytope polytope;
};

HkInstance build_instance(const GicChannel& channel, const PowerSplit& split);

/// The (R1, R2) shadow of the instance, R1 = RU1 + RV1 and R2 = RU2 + RV2.
Region2D project_r1r2(const HkInstance& inst, double eps = kGeomTol);

/// Weight value standing for mu -> infinity (maximize R2 alone).
inline constexpr double kMuInfinity = std::numeric_limits<double>::infinity();

struct BoundaryEntry {
    double mu = 0;
    PowerSplit best_split;
    RatePair rate_pair;
    double objective_value = 0;  // r1 + mu r2, or r2 when mu is infinite
};

using BoundaryTrace = std::vector<BoundaryEntry>;

/// Private-power fractions 0, 1/(k-1), ..., 1. Throws std::domain_error if k < 2.
std::vector<double> split_fractions(int grid_k);

/// Maximize r1 + mu r2 over one instance's polytope.
BoundaryEntry maximize_weighted(const HkInstance& inst, double mu, double eps = kGeomTol);

/// Best split on the grid_k x grid_k grid of private fractions. Ties (within
/// eps) keep the lexicographically smaller (lambda1, lambda2).
BoundaryEntry optimize_weighted(const GicChannel& channel, double mu, int grid_k, double eps = kGeomTol);

/// 41 log-spaced weights in [2^-5, 2^5] plus 0 and the infinite proxy, ascending.
std::vector<double> default_mu_sweep();

/// One optimize_weighted entry per weight, sorted by mu ascending.
BoundaryTrace trace_boundary(const GicChannel& channel, std::vector<double> mus, int grid_k,
                             double eps = kGeomTol);

struct RegionUnion {
    Region2D hull;                  // convex hull (time sharing)
    std::vector<Point2> raw_union;  // counterclockwise boundary of the plain union
};

/// Union of project_r1r2 over every split of the grid.
RegionUnion union_over_splits(const GicChannel& channel, int grid_k, double eps = kGeomTol);

/// Convex hull of the union over grid splits.
Region2D region_union(const GicChannel& channel, int grid_k, double eps = kGeomTol);

/// Boundary of the union of downward-closed regions of the nonnegative
/// quadrant, counterclockwise from the origin. Throws std::domain_error if a
/// region does not have the origin as a vertex.
std::vector<Point2> downward_union(const std::vector<Region2D>& regions);

/// [0, C(p1/n1)] x [0, C(p2/n2)]: the rates without interference.
Region2D interference_free_rectangle(const GicChannel& channel);

}  // namespace hkgic
