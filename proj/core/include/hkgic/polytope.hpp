#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hkgic/tolerance.hpp"

namespace hkgic {

/// The half-space system has no feasible point.
class InfeasibleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An objective is unbounded over a system expected to be bounded.
class UnboundedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// coeffs . x <= bound
struct Halfspace {
    std::vector<double> coeffs;
    double bound = 0;

    double lhs(std::span<const double> x) const;
};

/// Half-space system over named rate coordinates.
class RatePolytope {
public:
    /// Throws std::domain_error on duplicate names, wrong row widths or
    /// all-zero rows.
    RatePolytope(std::vector<std::string> coords, std::vector<Halfspace> rows);

    /// Same, with a row -x_i <= 0 appended for every coordinate.
    static RatePolytope with_nonnegativity(std::vector<std::string> coords, std::vector<Halfspace> rows);

    const std::vector<std::string>& coords() const { return coords_; }
    const std::vector<Halfspace>& rows() const { return rows_; }
    std::size_t dimension() const { return coords_.size(); }

    /// Throws std::domain_error for an unknown name.
    std::size_t index_of(const std::string& name) const;
    bool has_coord(const std::string& name) const;

    /// Largest row violation at x, each row scaled so its max-abs coefficient is 1.
    double max_violation(std::span<const double> x) const;
    bool contains(std::span<const double> x, double eps = kGeomTol) const { return max_violation(x) <= eps; }

    /// Copy with extra rows appended.
    RatePolytope with_rows(std::span<const Halfspace> extra) const;

    /// Copy with coordinate `name` inserted at `position`, pinned to [lo, hi].
    RatePolytope with_coordinate(const std::string& name, std::size_t position, double lo, double hi) const;

    /// Copy with coordinates reordered to `order` (a permutation of coords()).
    RatePolytope reordered(const std::vector<std::string>& order) const;

private:
    std::vector<std::string> coords_;
    std::vector<Halfspace> rows_;
};

/// Maximizer of a linear objective.
struct Optimum {
    double value = 0;
    std::vector<double> point;
};

/// Outcome of redundancy removal.
struct Redundancy {
    RatePolytope polytope;
    std::vector<std::size_t> removed;  // input row indices, ascending
};

/// True if no point satisfies every row within eps.
bool is_empty(const RatePolytope& poly, double eps = kGeomTol);

/// Maximize objective . x. Among optimal points the lexicographically
/// largest under the coordinate order is returned (to within eps).
/// Throws InfeasibleError or UnboundedError.
Optimum maximize(const RatePolytope& poly, std::span<const double> objective, double eps = kGeomTol);

/// Maximum of row `row`'s left-hand side over all other rows of `poly`
/// together with the maximizing point; value is +inf when unbounded.
Optimum row_support(const RatePolytope& poly, std::size_t row, double eps = kGeomTol);

/// True if row `row` is implied by the remaining rows.
bool is_row_redundant(const RatePolytope& poly, std::size_t row, double eps = kGeomTol);

/// Drop rows implied by the others, one at a time. Rows are visited in an
/// order fixed by their normalized contents, so the kept set does not depend
/// on the input row order. Throws InfeasibleError on an empty system.
Redundancy remove_redundant(const RatePolytope& poly, double eps = kGeomTol);

/// Fourier-Motzkin projection eliminating `coord`. The result has no
/// redundant rows. Throws std::domain_error for an unknown name or when
/// `coord` is the only coordinate, InfeasibleError if the system is empty.
RatePolytope eliminate(const RatePolytope& poly, const std::string& coord, double eps = kGeomTol);

/// Eliminate several coordinates in the given order.
RatePolytope eliminate_all(RatePolytope poly, std::span<const std::string> coords, double eps = kGeomTol);

/// Throws UnboundedError unless every coordinate is bounded above and below.
void require_bounded(const RatePolytope& poly, double eps = kGeomTol);

}  // namespace hkgic
