#pragma once

#include <optional>
#include <span>
#include <vector>

#include "hkgic/polytope.hpp"

namespace hkgic {

struct Point2 {
    double x = 0;
    double y = 0;
};

/// Closed convex polygon with counterclockwise vertices. Zero-area regions
/// are kept as two vertices (a segment) or one vertex (a point).
class Region2D {
public:
    /// Convex hull of `points`. Points closer than eps are merged and vertices
    /// within eps of the line through their neighbors are dropped.
    /// Throws std::domain_error if `points` is empty.
    static Region2D hull_of(std::span<const Point2> points, double eps = kGeomTol);

    const std::vector<Point2>& vertices() const { return vertices_; }
    std::size_t size() const { return vertices_.size(); }

    double area() const;

    /// Lower-left and upper-right corners of the axis-aligned bounding box.
    std::pair<Point2, Point2> bounding_box() const;

    /// Half-plane description with unit-length normals. Segments and points
    /// get two-sided rows along and across their extent.
    std::vector<Halfspace> halfspaces() const;

    /// Largest half-plane violation at p (a Euclidean distance lower bound).
    double violation(Point2 p) const;
    bool contains(Point2 p, double eps = kGeomTol) const { return violation(p) <= eps; }

    /// Same region with coordinates exchanged.
    Region2D swapped() const;

private:
    explicit Region2D(std::vector<Point2> v) : vertices_(std::move(v)) {}

    std::vector<Point2> vertices_;
};

/// Rounding-level merge distance for hull_of over `points`.
double vertex_merge_tol(std::span<const Point2> points);

/// Vertices of a two-coordinate polytope. Throws std::domain_error unless the
/// polytope has exactly two coordinates, InfeasibleError if it is empty.
Region2D extract_region2d(const RatePolytope& poly, double eps = kGeomTol);

/// Intersection of two regions; std::nullopt when they do not meet.
std::optional<Region2D> intersect2d(const Region2D& r1, const Region2D& r2, double eps = kGeomTol);

}  // namespace hkgic
