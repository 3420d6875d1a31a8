#pragma once

#include <string>
#include <vector>

#include "hkgic/hkregion.hpp"
#include "hkgic/tolerance.hpp"

namespace hkgic {

// The receiver-side projections of an HK polytope.
//
//   MAC1  over (ru1, ru2, rv1): the polytope with rv2 eliminated.
//   MAC2  over (ru1, ru2, rv2): the polytope with rv1 eliminated.
//   mac1  over (rv1, rv2): MAC1 with ru1, ru2 eliminated.
//   mac2  over (rv1, rv2): MAC2 with ru1, ru2 eliminated.
//
// MAC1 has no rv2 axis; it is placed in the four-rate space on the subspace
// rv2 = 0 before any further projection, so mac1 lies on the rv1 axis and
// mac2 on the rv2 axis.

enum class MacLabel { kMac1, kMac2, kMac1Plane, kMac2Plane };

std::string to_string(MacLabel label);

struct MacProjection {
    MacLabel label;
    RatePolytope polytope;
};

struct MacProjections {
    MacProjection mac1_3d;  // MAC1
    MacProjection mac2_3d;  // MAC2
    MacProjection mac1;     // mac1
    MacProjection mac2;     // mac2
};

MacProjections build_mac_projections(const HkInstance& inst, double eps = kGeomTol);

/// MAC1 (or MAC2) lifted back into (ru1, ru2, rv1, rv2) with the missing
/// private rate pinned to zero.
RatePolytope lift_to_layers(const MacProjection& mac);

struct Corners {
    Point2 upper;  // maximizes rv2, then rv1
    Point2 lower;  // maximizes rv1, then rv2
};

/// Throws std::domain_error for a 3-d projection, InfeasibleError if empty.
Corners corner_points(const MacProjection& mac, double eps = kGeomTol);

enum class ClaimId { kRedundancyHk11Hk12, kRectangleMacIntersection, kCornerCoincidence, kUvVolume };
enum class Verdict { kHolds, kFails, kDegenerate };

std::string to_string(ClaimId id);
std::string to_string(Verdict v);

/// Outcome of one claim check.
///
///   redundancy_hk11_hk12       witness: the 4-d point maximizing the
///                              violated row over the other 17 rows
///                              (first the term-11 row, then term 12)
///   rectangle_mac_intersection witness: the bounding-box corner outside
///                              mac1 ∩ mac2, or the vertices when degenerate
///   corner_coincidence         witness: mac1 upper corner then mac2 lower corner
///   uv_volume                  witness: vertices of the joint (rv1, rv2) shadow
///
/// `violation` is the amount by which the witness breaks the claim (<= 0
/// when it holds).
struct ClaimReport {
    ClaimId id;
    Verdict verdict;
    std::vector<double> witness;
    double violation = 0;
    double tolerance = 0;
    std::string detail;
};

std::vector<ClaimReport> verify_claims(const HkInstance& inst, const Tolerances& tol = {});

/// Independently recompute how far a report's witness breaks its claim.
double reevaluate_violation(const HkInstance& inst, const ClaimReport& report, const Tolerances& tol = {});

struct SplitClaims {
    PowerSplit split;
    std::vector<ClaimReport> reports;
};

/// verify_claims for every split of the grid_k x grid_k private-fraction
/// grid, lambda1 outer and lambda2 inner. Throws std::domain_error if grid_k < 2.
std::vector<SplitClaims> verify_over_splits(const GicChannel& channel, int grid_k, const Tolerances& tol = {});

}  // namespace hkgic
