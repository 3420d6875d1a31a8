#include <doctest.h>

#include <cmath>
#include <random>

#include "hkgic/region2d.hpp"
#include "../support/oracles.hpp"

using namespace hkgic;

namespace {

Halfspace hs(double cx, double cy, double b) { return {{cx, cy}, b}; }

RatePolytope poly2(std::vector<Halfspace> rows) { return RatePolytope({"x", "y"}, std::move(rows)); }

RatePolytope box(double x0, double x1, double y0, double y1) {
    return poly2({hs(1, 0, x1), hs(-1, 0, -x0), hs(0, 1, y1), hs(0, -1, -y0)});
}

// Two-user MAC pentagon {x <= cx, y <= cy, x + y <= cs, x, y >= 0}.
RatePolytope pentagon(double cx, double cy, double cs) {
    return poly2({hs(1, 0, cx), hs(0, 1, cy), hs(1, 1, cs), hs(-1, 0, 0), hs(0, -1, 0)});
}

bool near(Point2 a, Point2 b, double tol = 1e-12) { return std::abs(a.x - b.x) <= tol && std::abs(a.y - b.y) <= tol; }

void check_invariants(const Region2D& r, const RatePolytope& src) {
    const auto& v = r.vertices();
    const std::size_t n = v.size();
    for (const auto& p : v) {
        const double xy[2] = {p.x, p.y};
        CHECK(src.contains(xy, 1e-9));
    }
    if (n >= 3) {
        CHECK(r.area() > 0);
        for (std::size_t i = 0; i < n; ++i) {
            const auto& o = v[i];
            const auto& a = v[(i + 1) % n];
            const auto& b = v[(i + 2) % n];
            const double cr = (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
            CHECK(cr / std::hypot(b.x - o.x, b.y - o.y) > 1e-9);
        }
    }
}

}  // namespace

TEST_CASE("extract: unit square") {
    const auto p = box(0, 1, 0, 1);
    const auto r = extract_region2d(p);
    REQUIRE(r.size() == 4);
    CHECK(near(r.vertices()[0], {0, 0}));
    CHECK(near(r.vertices()[1], {1, 0}));
    CHECK(near(r.vertices()[2], {1, 1}));
    CHECK(near(r.vertices()[3], {0, 1}));
    check_invariants(r, p);
}

TEST_CASE("extract: triangle") {
    const auto p = poly2({hs(-1, 0, 0), hs(0, -1, 0), hs(1, 1, 1)});
    const auto r = extract_region2d(p);
    REQUIRE(r.size() == 3);
    CHECK(near(r.vertices()[0], {0, 0}));
    CHECK(near(r.vertices()[1], {1, 0}));
    CHECK(near(r.vertices()[2], {0, 1}));
}

TEST_CASE("extract: MAC pentagon corners") {
    const auto p = pentagon(1, 1, 1.5);
    const auto r = extract_region2d(p);
    REQUIRE(r.size() == 5);
    const auto& v = r.vertices();
    CHECK(std::any_of(v.begin(), v.end(), [](Point2 q) { return near(q, {1, 0.5}); }));
    CHECK(std::any_of(v.begin(), v.end(), [](Point2 q) { return near(q, {0.5, 1}); }));
    CHECK(r.area() == doctest::Approx(1.0 - 0.125));
    check_invariants(r, p);
}

TEST_CASE("extract: redundant and collinear rows do not add vertices") {
    const auto p = poly2({hs(1, 0, 1), hs(1, 0, 2), hs(-1, 0, 0), hs(0, 1, 1), hs(0, -1, 0), hs(1, 1, 2)});
    CHECK(extract_region2d(p).size() == 4);
}

TEST_CASE("extract: degenerate regions") {
    const auto seg = extract_region2d(box(0, 1, 0, 0));
    CHECK(seg.size() == 2);
    CHECK(seg.area() == 0);
    const auto pt = extract_region2d(box(0.5, 0.5, 0.25, 0.25));
    REQUIRE(pt.size() == 1);
    CHECK(near(pt.vertices()[0], {0.5, 0.25}));
}

TEST_CASE("extract: error paths") {
    CHECK_THROWS_AS(extract_region2d(box(1, 0, 0, 1)), InfeasibleError);
    CHECK_THROWS_AS(extract_region2d(RatePolytope({"x"}, {{{1}, 1}})), std::domain_error);
}

TEST_CASE("intersect: overlapping squares") {
    const auto a = extract_region2d(box(0, 1, 0, 1));
    const auto b = extract_region2d(box(0.5, 1.5, 0, 1));
    const auto m = intersect2d(a, b);
    REQUIRE(m);
    REQUIRE(m->size() == 4);
    const auto [lo, hi] = m->bounding_box();
    CHECK(near(lo, {0.5, 0}));
    CHECK(near(hi, {1, 1}));
    CHECK(m->area() == doctest::Approx(0.5));
}

TEST_CASE("intersect: disjoint squares are empty") {
    const auto a = extract_region2d(box(0, 1, 0, 1));
    const auto b = extract_region2d(box(2, 3, 0, 1));
    CHECK_FALSE(intersect2d(a, b).has_value());
}

TEST_CASE("intersect: degenerate operands") {
    const auto xaxis = extract_region2d(box(0, 1, 0, 0));
    const auto yaxis = extract_region2d(box(0, 0, 0, 2));
    const auto m = intersect2d(xaxis, yaxis);
    REQUIRE(m);
    REQUIRE(m->size() == 1);
    CHECK(near(m->vertices()[0], {0, 0}, 1e-9));

    const auto sq = extract_region2d(box(0, 1, 0, 1));
    const auto diag = Region2D::hull_of(std::vector<Point2>{{-1, -1}, {2, 2}});
    const auto cut = intersect2d(sq, diag);
    REQUIRE(cut);
    REQUIRE(cut->size() == 2);
    CHECK(near(cut->vertices()[0], {0, 0}, 1e-9));
    CHECK(near(cut->vertices()[1], {1, 1}, 1e-9));
}

TEST_CASE("intersect: Monte Carlo membership of pentagon intersections") {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 5; ++trial) {
        const double ax = testing::uniform(rng, 0.3, 1), ay = testing::uniform(rng, 0.3, 1);
        const double bx = testing::uniform(rng, 0.3, 1), by = testing::uniform(rng, 0.3, 1);
        const auto a = extract_region2d(pentagon(ax, ay, testing::uniform(rng, std::max(ax, ay), ax + ay)));
        const auto b = extract_region2d(pentagon(bx, by, testing::uniform(rng, std::max(bx, by), bx + by)));
        const auto m = intersect2d(a, b);
        REQUIRE(m);
        int wrong = 0;
        for (int s = 0; s < 100000 / 5; ++s) {
            const Point2 p{testing::uniform(rng, -0.1, 1.1), testing::uniform(rng, -0.1, 1.1)};
            const double in_both = std::max(a.violation(p), b.violation(p));
            const double in_meet = m->violation(p);
            if (std::abs(in_both) <= 1e-9 || std::abs(in_meet) <= 1e-9) continue;
            if ((in_both < 0) != (in_meet < 0)) ++wrong;
        }
        CHECK(wrong == 0);
    }
}

TEST_CASE("hull_of merges duplicates and drops collinear points") {
    const std::vector<Point2> pts{{0, 0}, {1, 0}, {2, 0}, {2, 1}, {0, 1}, {1, 1}, {0, 0}, {1, 0.5}};
    const auto r = Region2D::hull_of(pts);
    CHECK(r.size() == 4);
    CHECK(r.area() == doctest::Approx(2));
    CHECK_THROWS_AS(Region2D::hull_of(std::vector<Point2>{}), std::domain_error);
}

TEST_CASE("swapped mirrors the region") {
    const auto r = extract_region2d(pentagon(1, 0.5, 1.2));
    const auto s = r.swapped();
    CHECK(s.area() == doctest::Approx(r.area()));
    for (const auto& v : r.vertices()) {
        CHECK(s.contains({v.y, v.x}, 1e-12));
    }
}
