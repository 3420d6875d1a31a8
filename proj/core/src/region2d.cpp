#include "hkgic/region2d.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace hkgic {

namespace {

double cross(Point2 o, Point2 a, Point2 b) { return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x); }

double dist(Point2 a, Point2 b) { return std::hypot(a.x - b.x, a.y - b.y); }

// True if `mid` lies within eps of the line through `from` and `to`, on the
// non-left side.
bool not_left_turn(Point2 from, Point2 mid, Point2 to, double eps) {
    const double len = dist(from, to);
    if (len <= eps) {
        return true;
    }
    return cross(from, mid, to) <= eps * len;
}

Halfspace row(double cx, double cy, double bound) { return {{cx, cy}, bound}; }

}  // namespace

double vertex_merge_tol(std::span<const Point2> points) {
    double scale = 1;
    for (const auto& p : points) {
        scale = std::max({scale, std::abs(p.x), std::abs(p.y)});
    }
    return kRoundingTol * scale;
}

Region2D Region2D::hull_of(std::span<const Point2> points, double eps) {
    if (points.empty()) {
        throw std::domain_error("hull_of: no points");
    }
    std::vector<Point2> pts(points.begin(), points.end());
    std::sort(pts.begin(), pts.end(), [](Point2 a, Point2 b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });

    std::vector<Point2> uniq;
    for (const auto& p : pts) {
        bool dup = false;
        for (auto it = uniq.rbegin(); it != uniq.rend() && it->x >= p.x - eps; ++it) {
            if (dist(p, *it) <= eps) {
                dup = true;
                break;
            }
        }
        if (!dup) {
            uniq.push_back(p);
        }
    }
    if (uniq.size() == 1) {
        return Region2D(uniq);
    }

    // Andrew's monotone chain.
    std::vector<Point2> h(2 * uniq.size());
    std::size_t k = 0;
    for (const auto& p : uniq) {
        while (k >= 2 && not_left_turn(h[k - 2], h[k - 1], p, eps)) --k;
        h[k++] = p;
    }
    for (std::size_t i = uniq.size() - 1, lower = k + 1; i-- > 0;) {
        const auto& p = uniq[i];
        while (k >= lower && not_left_turn(h[k - 2], h[k - 1], p, eps)) --k;
        h[k++] = p;
    }
    h.resize(k - 1);
    if (h.size() == 2 && dist(h[0], h[1]) <= eps) {
        h.resize(1);
    }
    return Region2D(std::move(h));
}

double Region2D::area() const {
    double s = 0;
    const std::size_t n = vertices_.size();
    if (n < 3) {
        return 0;
    }
    for (std::size_t i = 0; i < n; ++i) {
        const auto& p = vertices_[i];
        const auto& q = vertices_[(i + 1) % n];
        s += p.x * q.y - q.x * p.y;
    }
    return 0.5 * s;
}

std::pair<Point2, Point2> Region2D::bounding_box() const {
    Point2 lo{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
    Point2 hi{-lo.x, -lo.y};
    for (const auto& v : vertices_) {
        lo.x = std::min(lo.x, v.x);
        lo.y = std::min(lo.y, v.y);
        hi.x = std::max(hi.x, v.x);
        hi.y = std::max(hi.y, v.y);
    }
    return {lo, hi};
}

std::vector<Halfspace> Region2D::halfspaces() const {
    std::vector<Halfspace> rows;
    const std::size_t n = vertices_.size();
    if (n == 1) {
        const auto& p = vertices_[0];
        rows = {row(1, 0, p.x), row(-1, 0, -p.x), row(0, 1, p.y), row(0, -1, -p.y)};
    } else if (n == 2) {
        const auto& p = vertices_[0];
        const auto& q = vertices_[1];
        const double len = dist(p, q);
        const double dx = (q.x - p.x) / len;
        const double dy = (q.y - p.y) / len;
        const double nx = -dy;
        const double ny = dx;
        const double off = nx * p.x + ny * p.y;
        rows = {row(nx, ny, off), row(-nx, -ny, -off), row(dx, dy, dx * q.x + dy * q.y),
                row(-dx, -dy, -(dx * p.x + dy * p.y))};
    } else {
        for (std::size_t i = 0; i < n; ++i) {
            const auto& p = vertices_[i];
            const auto& q = vertices_[(i + 1) % n];
            const double len = dist(p, q);
            const double nx = (q.y - p.y) / len;
            const double ny = -(q.x - p.x) / len;
            rows.push_back(row(nx, ny, nx * p.x + ny * p.y));
        }
    }
    return rows;
}

double Region2D::violation(Point2 p) const {
    double worst = -std::numeric_limits<double>::infinity();
    for (const auto& h : halfspaces()) {
        worst = std::max(worst, h.coeffs[0] * p.x + h.coeffs[1] * p.y - h.bound);
    }
    return worst;
}

Region2D Region2D::swapped() const {
    std::vector<Point2> pts;
    for (const auto& v : vertices_) {
        pts.push_back({v.y, v.x});
    }
    return hull_of(pts, 0.0);
}

Region2D extract_region2d(const RatePolytope& poly, double eps) {
    if (poly.dimension() != 2) {
        throw std::domain_error("extract_region2d: polytope must have exactly 2 coordinates");
    }
    const auto& rows = poly.rows();
    std::vector<Point2> candidates;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = i + 1; j < rows.size(); ++j) {
            const auto& a = rows[i].coeffs;
            const auto& b = rows[j].coeffs;
            const double det = a[0] * b[1] - a[1] * b[0];
            const double scale = std::hypot(a[0], a[1]) * std::hypot(b[0], b[1]);
            if (std::abs(det) <= 1e-12 * scale) {
                continue;
            }
            const Point2 p{(rows[i].bound * b[1] - a[1] * rows[j].bound) / det,
                           (a[0] * rows[j].bound - rows[i].bound * b[0]) / det};
            const double xy[2] = {p.x, p.y};
            if (poly.contains(xy, eps)) {
                candidates.push_back(p);
            }
        }
    }
    if (candidates.empty()) {
        throw InfeasibleError("extract_region2d: empty polygon");
    }
    return Region2D::hull_of(candidates, vertex_merge_tol(candidates));
}

std::optional<Region2D> intersect2d(const Region2D& r1, const Region2D& r2, double eps) {
    auto rows = r1.halfspaces();
    const auto more = r2.halfspaces();
    rows.insert(rows.end(), more.begin(), more.end());
    try {
        return extract_region2d(RatePolytope({"x", "y"}, std::move(rows)), eps);
    } catch (const InfeasibleError&) {
        return std::nullopt;
    }
}

}  // namespace hkgic
