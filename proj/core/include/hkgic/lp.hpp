#pragma once

#include <span>
#include <vector>

namespace hkgic::lp {

enum class Status { optimal, infeasible, unbounded };

struct Solution {
    Status status = Status::infeasible;
    double value = 0;
    std::vector<double> x;
};

/// Dense matrix, row major: one inner vector per constraint.
using Matrix = std::vector<std::vector<double>>;

/// Maximize c.x subject to A x <= b with x free in sign.
///
/// Two-phase tableau simplex using Bland's rule, so degenerate systems
/// (many zero bounds) cannot cycle. Intended for the small dense systems
/// produced by rate polytopes; `feas_tol` is the largest row violation
/// still accepted as feasible.
Solution solve(const Matrix& a, std::span<const double> b, std::span<const double> c,
               double feas_tol = 1e-9);

}  // namespace hkgic::lp
