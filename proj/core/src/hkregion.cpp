#include "hkgic/hkregion.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>

#include "parallel.hpp"

namespace hkgic {

std::array<double, 4> hk_row_pattern(std::size_t term) {
    //                  ru1 ru2 rv1 rv2
    switch (term) {
        case 1: return {1, 0, 0, 0};
        case 2: return {1, 0, 0, 0};
        case 3: return {0, 1, 0, 0};
        case 4: return {0, 1, 0, 0};
        case 5: return {0, 0, 1, 0};
        case 6: return {0, 0, 0, 1};
        case 7: return {1, 1, 0, 0};
        case 8: return {1, 1, 0, 0};
        case 9: return {1, 0, 1, 0};
        case 10: return {0, 1, 0, 1};
        case 11: return {0, 1, 1, 0};
        case 12: return {1, 0, 0, 1};
        case 13: return {1, 1, 1, 0};
        case 14: return {1, 1, 0, 1};
        default: throw std::domain_error("hk_row_pattern: term must be in 1..14");
    }
}

HkInstance build_instance(const GicChannel& channel, const PowerSplit& split) {
    const HkBounds bounds = compute_bounds(channel, split);
    std::vector<Halfspace> rows;
    for (std::size_t t = 1; t <= kNumHkTerms; ++t) {
        const auto pat = hk_row_pattern(t);
        rows.push_back({{pat.begin(), pat.end()}, bounds[t]});
    }
    auto poly = RatePolytope::with_nonnegativity({kLayerCoords.begin(), kLayerCoords.end()}, std::move(rows));
    return {channel, split, bounds, std::move(poly)};
}

Region2D project_r1r2(const HkInstance& inst, double eps) {
    std::vector<Halfspace> rows;
    for (const auto& r : inst.polytope.rows()) {
        Halfspace h = r;
        h.coeffs.push_back(0.0);
        h.coeffs.push_back(0.0);
        rows.push_back(std::move(h));
    }
    // r1 = ru1 + rv1 and r2 = ru2 + rv2 as paired inequalities.
    //                   ru1 ru2 rv1 rv2 r1 r2
    rows.push_back({{-1, 0, -1, 0, 1, 0}, 0.0});
    rows.push_back({{1, 0, 1, 0, -1, 0}, 0.0});
    rows.push_back({{0, -1, 0, -1, 0, 1}, 0.0});
    rows.push_back({{0, 1, 0, 1, 0, -1}, 0.0});
    RatePolytope lifted({"ru1", "ru2", "rv1", "rv2", "r1", "r2"}, std::move(rows));

    const std::array<std::string, 4> order{"ru1", "rv1", "ru2", "rv2"};
    return extract_region2d(eliminate_all(std::move(lifted), order, eps), eps);
}

std::vector<double> split_fractions(int grid_k) {
    if (grid_k < 2) {
        throw std::domain_error("grid_k must be >= 2");
    }
    std::vector<double> out;
    for (int i = 0; i < grid_k; ++i) {
        out.push_back(static_cast<double>(i) / static_cast<double>(grid_k - 1));
    }
    return out;
}

BoundaryEntry maximize_weighted(const HkInstance& inst, double mu, double eps) {
    if (!(mu >= 0)) {
        throw std::domain_error("mu must be >= 0");
    }
    const bool inf = std::isinf(mu);
    const double w1 = inf ? 0.0 : 1.0;
    const double w2 = inf ? 1.0 : mu;
    const std::array<double, 4> objective{w1, w2, w1, w2};
    const Optimum opt = maximize(inst.polytope, objective, eps);
    const RateTuple4 t{opt.point[0], opt.point[1], opt.point[2], opt.point[3]};
    const RatePair rp = RatePair::from_layers(t);
    return {mu, inst.split, rp, w1 * rp.r1 + w2 * rp.r2};
}

BoundaryEntry optimize_weighted(const GicChannel& channel, double mu, int grid_k, double eps) {
    const auto fr = split_fractions(grid_k);
    const std::size_t k = fr.size();
    const auto entries = detail::parallel_map<std::optional<BoundaryEntry>>(k * k, [&](std::size_t idx) {
        const auto split = PowerSplit::from_private_fractions(channel, fr[idx / k], fr[idx % k]);
        return std::optional<BoundaryEntry>(maximize_weighted(build_instance(channel, split), mu, eps));
    });
    std::optional<BoundaryEntry> best;
    for (const auto& e : entries) {
        if (!best || e->objective_value > best->objective_value + eps) {
            best = e;
        }
    }
    return *best;
}

std::vector<double> default_mu_sweep() {
    std::vector<double> mus{0.0};
    for (int i = 0; i <= 40; ++i) {
        mus.push_back(std::exp2(-5.0 + 10.0 * i / 40.0));
    }
    mus.push_back(kMuInfinity);
    return mus;
}

BoundaryTrace trace_boundary(const GicChannel& channel, std::vector<double> mus, int grid_k, double eps) {
    if (mus.empty()) {
        throw std::domain_error("mu list is empty");
    }
    for (double mu : mus) {
        if (!(mu >= 0)) {
            throw std::domain_error("mu values must be >= 0");
        }
    }
    split_fractions(grid_k);
    std::stable_sort(mus.begin(), mus.end());
    BoundaryTrace trace;
    for (double mu : mus) {
        trace.push_back(optimize_weighted(channel, mu, grid_k, eps));
    }
    return trace;
}

Region2D interference_free_rectangle(const GicChannel& channel) {
    const double x = awgn_capacity(channel.p1() / channel.n1());
    const double y = awgn_capacity(channel.p2() / channel.n2());
    const std::array<Point2, 4> corners{{{0, 0}, {x, 0}, {x, y}, {0, y}}};
    return Region2D::hull_of(corners, 0.0);
}

namespace {

// Upper frontier of a downward-closed region as a polyline from (0, Y) to
// (X, 0), x nondecreasing and y nonincreasing.
using Frontier = std::vector<Point2>;

Frontier frontier_of(const Region2D& region) {
    const auto& v = region.vertices();
    constexpr double kOriginTol = 1e-9;
    if (std::abs(v[0].x) > kOriginTol || std::abs(v[0].y) > kOriginTol) {
        throw std::domain_error("downward_union: region does not start at the origin");
    }
    Frontier f;
    for (std::size_t i = v.size(); i-- > 1;) {
        f.push_back({std::max(0.0, v[i].x), std::max(0.0, v[i].y)});
    }
    if (f.empty()) {
        return {{0, 0}};
    }
    if (f.front().x > 0) {
        f.insert(f.begin(), {0.0, f.front().y});
    }
    if (f.back().y > 0) {
        f.push_back({f.back().x, 0.0});
    }
    return f;
}

double extent(const Frontier& f) { return f.back().x; }

// Value approaching x from the left (top of any vertical edge at x).
double left_value(const Frontier& f, double x) {
    const auto it = std::lower_bound(f.begin(), f.end(), x, [](const Point2& p, double v) { return p.x < v; });
    if (it == f.end()) return f.back().y;
    if (it->x == x || it == f.begin()) return it->y;
    const auto& p = *(it - 1);
    const auto& q = *it;
    return p.y + (q.y - p.y) * (x - p.x) / (q.x - p.x);
}

// Value approaching x from the right (bottom of any vertical edge at x).
double right_value(const Frontier& f, double x) {
    const auto it = std::upper_bound(f.begin(), f.end(), x, [](double v, const Point2& p) { return v < p.x; });
    if (it == f.begin()) return f.front().y;
    const auto& p = *(it - 1);
    if (p.x == x || it == f.end()) return p.y;
    const auto& q = *it;
    return p.y + (q.y - p.y) * (x - p.x) / (q.x - p.x);
}

Frontier merge(const Frontier& a, const Frontier& b) {
    std::vector<double> xs;
    for (const auto& p : a) xs.push_back(p.x);
    for (const auto& p : b) xs.push_back(p.x);
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

    const Frontier* fs[2] = {&a, &b};
    Frontier out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double x = xs[i];
        double lv = 0;
        double rv = 0;
        for (const auto* f : fs) {
            if (x <= extent(*f)) lv = std::max(lv, left_value(*f, x));
            if (x < extent(*f)) rv = std::max(rv, right_value(*f, x));
        }
        out.push_back({x, lv});
        if (rv != lv) out.push_back({x, rv});
        if (i + 1 == xs.size()) break;

        const double xn = xs[i + 1];
        if (xn <= extent(a) && xn <= extent(b)) {
            const double da0 = right_value(a, x) - right_value(b, x);
            const double da1 = left_value(a, xn) - left_value(b, xn);
            if ((da0 > 0 && da1 < 0) || (da0 < 0 && da1 > 0)) {
                const double t = da0 / (da0 - da1);
                const double ya0 = right_value(a, x);
                const double ya1 = left_value(a, xn);
                out.push_back({x + t * (xn - x), ya0 + t * (ya1 - ya0)});
            }
        }
    }
    if (out.back().y != 0) out.push_back({out.back().x, 0.0});

    // Drop repeated and collinear points.
    Frontier clean;
    for (const auto& p : out) {
        if (!clean.empty() && clean.back().x == p.x && clean.back().y == p.y) continue;
        while (clean.size() >= 2) {
            const auto& o = clean[clean.size() - 2];
            const auto& m = clean.back();
            const double cr = (m.x - o.x) * (p.y - o.y) - (m.y - o.y) * (p.x - o.x);
            if (std::abs(cr) > 1e-15 * std::max(1.0, std::hypot(p.x - o.x, p.y - o.y))) break;
            clean.pop_back();
        }
        clean.push_back(p);
    }
    return clean;
}

}  // namespace

std::vector<Point2> downward_union(const std::vector<Region2D>& regions) {
    if (regions.empty()) {
        throw std::domain_error("downward_union: no regions");
    }
    std::vector<Frontier> level;
    for (const auto& r : regions) {
        level.push_back(frontier_of(r));
    }
    // Pairwise rounds keep every merge between frontiers of similar size.
    while (level.size() > 1) {
        std::vector<Frontier> next;
        for (std::size_t i = 0; i + 1 < level.size(); i += 2) {
            next.push_back(merge(level[i], level[i + 1]));
        }
        if (level.size() % 2 == 1) {
            next.push_back(std::move(level.back()));
        }
        level = std::move(next);
    }
    const Frontier& env = level.front();
    std::vector<Point2> poly{{0, 0}};
    for (std::size_t i = env.size(); i-- > 0;) {
        const auto& p = env[i];
        if (p.x == poly.back().x && p.y == poly.back().y) continue;
        if (p.x == 0 && p.y == 0) continue;
        poly.push_back(p);
    }
    return poly;
}

RegionUnion union_over_splits(const GicChannel& channel, int grid_k, double eps) {
    const auto fr = split_fractions(grid_k);
    const std::size_t k = fr.size();
    auto regions = detail::parallel_map<std::optional<Region2D>>(k * k, [&](std::size_t idx) {
        const auto split = PowerSplit::from_private_fractions(channel, fr[idx / k], fr[idx % k]);
        return std::optional<Region2D>(project_r1r2(build_instance(channel, split), eps));
    });
    std::vector<Region2D> all;
    std::vector<Point2> pts;
    for (auto& r : regions) {
        pts.insert(pts.end(), r->vertices().begin(), r->vertices().end());
        all.push_back(std::move(*r));
    }
    return {Region2D::hull_of(pts, vertex_merge_tol(pts)), downward_union(all)};
}

Region2D region_union(const GicChannel& channel, int grid_k, double eps) {
    const auto fr = split_fractions(grid_k);
    const std::size_t k = fr.size();
    const auto regions = detail::parallel_map<std::optional<Region2D>>(k * k, [&](std::size_t idx) {
        const auto split = PowerSplit::from_private_fractions(channel, fr[idx / k], fr[idx % k]);
        return std::optional<Region2D>(project_r1r2(build_instance(channel, split), eps));
    });
    std::vector<Point2> pts;
    for (const auto& r : regions) {
        pts.insert(pts.end(), r->vertices().begin(), r->vertices().end());
    }
    return Region2D::hull_of(pts, vertex_merge_tol(pts));
}

}  // namespace hkgic
