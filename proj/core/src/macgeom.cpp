#include "hkgic/macgeom.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>

#include "parallel.hpp"

namespace hkgic {

namespace {

constexpr double kZeroArea = 1e-12;

// Rows 10 and 11 of the HK polytope carry terms 11 and 12.
constexpr std::size_t kTerm11Row = 10;
constexpr std::size_t kTerm12Row = 11;

const std::array<std::string, 2> kCommonCoords{"ru1", "ru2"};
const std::array<std::string, 2> kPrivateCoords{"rv1", "rv2"};

void append_point(std::vector<double>& w, Point2 p) {
    w.push_back(p.x);
    w.push_back(p.y);
}

std::vector<double> flatten(const Region2D& r) {
    std::vector<double> w;
    for (const auto& v : r.vertices()) {
        append_point(w, v);
    }
    return w;
}

std::vector<Point2> unflatten(std::span<const double> w) {
    std::vector<Point2> pts;
    for (std::size_t i = 0; i + 1 < w.size(); i += 2) {
        pts.push_back({w[i], w[i + 1]});
    }
    return pts;
}

// MAC1 and MAC2 lifted into the four-rate space and intersected.
RatePolytope joint_layers(const MacProjections& macs) {
    const auto lifted1 = lift_to_layers(macs.mac1_3d);
    const auto lifted2 = lift_to_layers(macs.mac2_3d);
    return lifted1.with_rows(lifted2.rows());
}

ClaimReport check_redundancy(const HkInstance& inst, const Tolerances& tol) {
    ClaimReport rep{ClaimId::kRedundancyHk11Hk12, Verdict::kHolds, {}, -std::numeric_limits<double>::infinity(),
                    tol.claim, {}};
    for (const auto& [row, term] : {std::pair{kTerm11Row, 11}, std::pair{kTerm12Row, 12}}) {
        const Optimum support = row_support(inst.polytope, row, tol.geom);
        const double viol = support.value - inst.polytope.rows()[row].bound;
        if (viol > rep.violation) {
            rep.violation = viol;
            rep.witness = {static_cast<double>(term)};
            rep.witness.insert(rep.witness.end(), support.point.begin(), support.point.end());
        }
    }
    if (rep.violation > tol.claim) {
        rep.verdict = Verdict::kFails;
        rep.detail = "term " + std::to_string(static_cast<int>(rep.witness[0])) + " is not implied by the other rows";
    } else {
        rep.detail = "terms 11 and 12 are implied by the other rows";
    }
    return rep;
}

ClaimReport check_rectangle(const Region2D& mac1, const Region2D& mac2, const Tolerances& tol) {
    ClaimReport rep{ClaimId::kRectangleMacIntersection, Verdict::kHolds, {}, 0, tol.claim, {}};
    const auto meet = intersect2d(mac1, mac2, tol.geom);
    if (!meet) {
        rep.verdict = Verdict::kDegenerate;
        rep.detail = "mac1 and mac2 do not intersect";
        return rep;
    }
    const auto [lo, hi] = meet->bounding_box();
    const std::array<Point2, 4> corners{{{lo.x, lo.y}, {hi.x, lo.y}, {hi.x, hi.y}, {lo.x, hi.y}}};
    rep.violation = -std::numeric_limits<double>::infinity();
    Point2 worst{};
    for (const auto& c : corners) {
        const double v = std::max(mac1.violation(c), mac2.violation(c));
        if (v > rep.violation) {
            rep.violation = v;
            worst = c;
        }
    }
    if (rep.violation > tol.claim) {
        rep.verdict = Verdict::kFails;
        append_point(rep.witness, worst);
        rep.detail = "bounding-box corner lies outside mac1 ∩ mac2";
    } else if (meet->area() <= kZeroArea) {
        rep.verdict = Verdict::kDegenerate;
        rep.witness = flatten(*meet);
        rep.detail = meet->size() == 1 ? "intersection is a single point" : "intersection is a segment";
    } else {
        append_point(rep.witness, lo);
        append_point(rep.witness, hi);
        rep.detail = "intersection equals its bounding box";
    }
    return rep;
}

ClaimReport check_corners(const MacProjections& macs, const Region2D& mac1, const Region2D& mac2,
                          const Tolerances& tol) {
    ClaimReport rep{ClaimId::kCornerCoincidence, Verdict::kHolds, {}, 0, tol.claim, {}};
    const Point2 upper = corner_points(macs.mac1, tol.geom).upper;
    const Point2 lower = corner_points(macs.mac2, tol.geom).lower;
    append_point(rep.witness, upper);
    append_point(rep.witness, lower);
    rep.violation = std::max(std::abs(upper.x - lower.x), std::abs(upper.y - lower.y));
    if (rep.violation > tol.claim) {
        rep.verdict = Verdict::kFails;
        rep.detail = "mac1 upper corner differs from mac2 lower corner";
    } else if (mac1.size() == 1 && mac2.size() == 1) {
        rep.verdict = Verdict::kDegenerate;
        rep.detail = "mac1 and mac2 are single points";
    } else {
        rep.detail = "mac1 upper corner equals mac2 lower corner";
    }
    return rep;
}

ClaimReport check_uv_volume(const MacProjections& macs, const Tolerances& tol) {
    ClaimReport rep{ClaimId::kUvVolume, Verdict::kHolds, {}, 0, tol.claim, {}};
    const RatePolytope joint = joint_layers(macs);
    const Region2D private_shadow = extract_region2d(eliminate_all(joint, kCommonCoords, tol.geom), tol.geom);
    const Region2D common_shadow = extract_region2d(eliminate_all(joint, kPrivateCoords, tol.geom), tol.geom);
    rep.violation = private_shadow.area();
    if (rep.violation > tol.claim) {
        rep.verdict = Verdict::kFails;
        rep.witness = flatten(private_shadow);
        rep.detail = "(rv1, rv2) shadow has positive area";
    } else if (common_shadow.area() <= kZeroArea) {
        rep.verdict = Verdict::kDegenerate;
        rep.witness = flatten(common_shadow);
        rep.detail = "(ru1, ru2) shadow has zero area";
    } else {
        rep.witness = flatten(private_shadow);
        rep.detail = "(rv1, rv2) shadow has zero area, (ru1, ru2) shadow area " +
                     std::to_string(common_shadow.area());
    }
    return rep;
}

}  // namespace

std::string to_string(MacLabel label) {
    switch (label) {
        case MacLabel::kMac1: return "MAC1";
        case MacLabel::kMac2: return "MAC2";
        case MacLabel::kMac1Plane: return "mac1";
        case MacLabel::kMac2Plane: return "mac2";
    }
    return "?";
}

std::string to_string(ClaimId id) {
    switch (id) {
        case ClaimId::kRedundancyHk11Hk12: return "redundancy_hk11_hk12";
        case ClaimId::kRectangleMacIntersection: return "rectangle_mac_intersection";
        case ClaimId::kCornerCoincidence: return "corner_coincidence";
        case ClaimId::kUvVolume: return "uv_volume";
    }
    return "?";
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::kHolds: return "holds";
        case Verdict::kFails: return "fails";
        case Verdict::kDegenerate: return "degenerate";
    }
    return "?";
}

RatePolytope lift_to_layers(const MacProjection& mac) {
    switch (mac.label) {
        case MacLabel::kMac1: return mac.polytope.with_coordinate("rv2", 3, 0.0, 0.0);
        case MacLabel::kMac2: return mac.polytope.with_coordinate("rv1", 2, 0.0, 0.0);
        default: throw std::domain_error("lift_to_layers: needs MAC1 or MAC2");
    }
}

MacProjections build_mac_projections(const HkInstance& inst, double eps) {
    MacProjection mac1_3d{MacLabel::kMac1, eliminate(inst.polytope, "rv2", eps)};
    MacProjection mac2_3d{MacLabel::kMac2, eliminate(inst.polytope, "rv1", eps)};
    MacProjection mac1{MacLabel::kMac1Plane, eliminate_all(lift_to_layers(mac1_3d), kCommonCoords, eps)};
    MacProjection mac2{MacLabel::kMac2Plane, eliminate_all(lift_to_layers(mac2_3d), kCommonCoords, eps)};
    return {std::move(mac1_3d), std::move(mac2_3d), std::move(mac1), std::move(mac2)};
}

Corners corner_points(const MacProjection& mac, double eps) {
    if (mac.polytope.dimension() != 2) {
        throw std::domain_error("corner_points: needs a two-coordinate projection");
    }
    const Region2D region = extract_region2d(mac.polytope, eps);
    const auto& v = region.vertices();
    // Lexicographic maximum with an eps-tolerant first key.
    auto lexmax = [&](auto first, auto second) {
        Point2 best = v.front();
        for (const auto& p : v) {
            const double d = first(p) - first(best);
            if (d > eps || (d >= -eps && second(p) > second(best))) {
                best = p;
            }
        }
        return best;
    };
    const auto px = [](const Point2& p) { return p.x; };
    const auto py = [](const Point2& p) { return p.y; };
    return {lexmax(py, px), lexmax(px, py)};
}

std::vector<ClaimReport> verify_claims(const HkInstance& inst, const Tolerances& tol) {
    const MacProjections macs = build_mac_projections(inst, tol.geom);
    const Region2D mac1 = extract_region2d(macs.mac1.polytope, tol.geom);
    const Region2D mac2 = extract_region2d(macs.mac2.polytope, tol.geom);
    return {check_redundancy(inst, tol), check_rectangle(mac1, mac2, tol), check_corners(macs, mac1, mac2, tol),
            check_uv_volume(macs, tol)};
}

double reevaluate_violation(const HkInstance& inst, const ClaimReport& report, const Tolerances& tol) {
    constexpr double kRejected = -std::numeric_limits<double>::infinity();
    // A witness must lie in the sets it claims to come from.
    constexpr double kMembership = 1e-7;
    switch (report.id) {
        case ClaimId::kRedundancyHk11Hk12: {
            if (report.witness.size() != 5) return kRejected;
            const auto term = static_cast<std::size_t>(report.witness[0]);
            if (term != 11 && term != 12) return kRejected;
            const std::span<const double> x(report.witness.data() + 1, 4);
            const auto& rows = inst.polytope.rows();
            const std::size_t target = term - 1;
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (i != target && rows[i].lhs(x) - rows[i].bound > kMembership) return kRejected;
            }
            return rows[target].lhs(x) - rows[target].bound;
        }
        case ClaimId::kRectangleMacIntersection: {
            const auto macs = build_mac_projections(inst, tol.geom);
            const Region2D mac1 = extract_region2d(macs.mac1.polytope, tol.geom);
            const Region2D mac2 = extract_region2d(macs.mac2.polytope, tol.geom);
            const auto meet = intersect2d(mac1, mac2, tol.geom);
            if (!meet || report.witness.size() != 2) return kRejected;
            const Point2 c{report.witness[0], report.witness[1]};
            const auto [lo, hi] = meet->bounding_box();
            if (c.x < lo.x - kMembership || c.x > hi.x + kMembership || c.y < lo.y - kMembership ||
                c.y > hi.y + kMembership) {
                return kRejected;
            }
            return std::max(mac1.violation(c), mac2.violation(c));
        }
        case ClaimId::kCornerCoincidence: {
            if (report.witness.size() != 4) return kRejected;
            const auto macs = build_mac_projections(inst, tol.geom);
            const Point2 upper{report.witness[0], report.witness[1]};
            const Point2 lower{report.witness[2], report.witness[3]};
            const double xu[2] = {upper.x, upper.y};
            const double xl[2] = {lower.x, lower.y};
            if (!macs.mac1.polytope.contains(xu, kMembership) || !macs.mac2.polytope.contains(xl, kMembership)) {
                return kRejected;
            }
            return std::max(std::abs(upper.x - lower.x), std::abs(upper.y - lower.y));
        }
        case ClaimId::kUvVolume: {
            const auto pts = unflatten(report.witness);
            if (pts.empty()) return kRejected;
            const auto macs = build_mac_projections(inst, tol.geom);
            const RatePolytope shadow = eliminate_all(joint_layers(macs), kCommonCoords, tol.geom);
            for (const auto& p : pts) {
                const double xy[2] = {p.x, p.y};
                if (!shadow.contains(xy, kMembership)) return kRejected;
            }
            return Region2D::hull_of(pts, 0.0).area();
        }
    }
    return kRejected;
}

std::vector<SplitClaims> verify_over_splits(const GicChannel& channel, int grid_k, const Tolerances& tol) {
    const auto fr = split_fractions(grid_k);
    const std::size_t k = fr.size();
    auto found = detail::parallel_map<std::optional<SplitClaims>>(k * k, [&](std::size_t idx) {
        const auto split = PowerSplit::from_private_fractions(channel, fr[idx / k], fr[idx % k]);
        return std::optional<SplitClaims>(SplitClaims{split, verify_claims(build_instance(channel, split), tol)});
    });
    std::vector<SplitClaims> out;
    out.reserve(found.size());
    for (auto& f : found) {
        out.push_back(std::move(*f));
    }
    return out;
}

}  // namespace hkgic
