#include "hkgic/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>

#include "hkgic/lp.hpp"

namespace hkgic {

namespace {

// Coefficients at or below this magnitude are treated as exact zeros by
// Fourier-Motzkin.
constexpr double kCoeffZero = 1e-12;

double max_abs(std::span<const double> v) {
    double m = 0;
    for (double x : v) {
        m = std::max(m, std::abs(x));
    }
    return m;
}

Halfspace normalized(const Halfspace& h) {
    const double s = max_abs(h.coeffs);
    Halfspace out = h;
    for (double& c : out.coeffs) {
        c /= s;
        if (std::abs(c) <= kCoeffZero) {
            c = 0;
        }
    }
    out.bound /= s;
    return out;
}

bool coeffs_less(const Halfspace& x, const Halfspace& y) {
    return std::lexicographical_compare(x.coeffs.begin(), x.coeffs.end(), y.coeffs.begin(), y.coeffs.end());
}

bool coeffs_equal(const Halfspace& x, const Halfspace& y) {
    for (std::size_t j = 0; j < x.coeffs.size(); ++j) {
        if (std::abs(x.coeffs[j] - y.coeffs[j]) > kCoeffZero) {
            return false;
        }
    }
    return true;
}

// Normalize and merge rows sharing a coefficient vector (keeping the
// tightest bound). Rows that normalize to all zeros are checked for
// consistency and dropped.
std::vector<Halfspace> normalize_and_dedupe(const std::vector<Halfspace>& rows, double eps) {
    std::vector<Halfspace> norm;
    norm.reserve(rows.size());
    for (const auto& r : rows) {
        if (max_abs(r.coeffs) <= kCoeffZero) {
            if (r.bound < -eps) {
                throw InfeasibleError("half-space system is empty (0 <= negative bound)");
            }
            continue;
        }
        norm.push_back(normalized(r));
    }
    std::stable_sort(norm.begin(), norm.end(), coeffs_less);
    std::vector<Halfspace> out;
    for (auto& r : norm) {
        if (!out.empty() && coeffs_equal(out.back(), r)) {
            out.back().bound = std::min(out.back().bound, r.bound);
        } else {
            out.push_back(std::move(r));
        }
    }
    return out;
}

lp::Matrix matrix_of(const std::vector<Halfspace>& rows, std::vector<double>& b) {
    lp::Matrix a;
    a.reserve(rows.size());
    b.clear();
    for (const auto& r : rows) {
        a.push_back(r.coeffs);
        b.push_back(r.bound);
    }
    return a;
}

double slack_for(double v, double eps) { return eps * std::max(1.0, std::abs(v)); }

}  // namespace

double Halfspace::lhs(std::span<const double> x) const {
    double s = 0;
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
        s += coeffs[j] * x[j];
    }
    return s;
}

RatePolytope::RatePolytope(std::vector<std::string> coords, std::vector<Halfspace> rows)
    : coords_(std::move(coords)), rows_(std::move(rows)) {
    std::set<std::string> seen;
    for (const auto& c : coords_) {
        if (!seen.insert(c).second) {
            throw std::domain_error("duplicate coordinate name: " + c);
        }
    }
    for (const auto& r : rows_) {
        if (r.coeffs.size() != coords_.size()) {
            throw std::domain_error("row width does not match coordinate count");
        }
        if (max_abs(r.coeffs) == 0.0) {
            throw std::domain_error("row has no nonzero coefficient");
        }
        if (!std::isfinite(r.bound) || std::any_of(r.coeffs.begin(), r.coeffs.end(),
                                                   [](double c) { return !std::isfinite(c); })) {
            throw std::domain_error("row has a non-finite entry");
        }
    }
}

RatePolytope RatePolytope::with_nonnegativity(std::vector<std::string> coords, std::vector<Halfspace> rows) {
    const std::size_t n = coords.size();
    for (std::size_t j = 0; j < n; ++j) {
        Halfspace h{std::vector<double>(n, 0.0), 0.0};
        h.coeffs[j] = -1.0;
        rows.push_back(std::move(h));
    }
    return RatePolytope(std::move(coords), std::move(rows));
}

std::size_t RatePolytope::index_of(const std::string& name) const {
    const auto it = std::find(coords_.begin(), coords_.end(), name);
    if (it == coords_.end()) {
        throw std::domain_error("unknown coordinate: " + name);
    }
    return static_cast<std::size_t>(it - coords_.begin());
}

bool RatePolytope::has_coord(const std::string& name) const {
    return std::find(coords_.begin(), coords_.end(), name) != coords_.end();
}

double RatePolytope::max_violation(std::span<const double> x) const {
    double worst = -std::numeric_limits<double>::infinity();
    for (const auto& r : rows_) {
        worst = std::max(worst, (r.lhs(x) - r.bound) / max_abs(r.coeffs));
    }
    return worst;
}

RatePolytope RatePolytope::with_rows(std::span<const Halfspace> extra) const {
    std::vector<Halfspace> rows = rows_;
    rows.insert(rows.end(), extra.begin(), extra.end());
    return RatePolytope(coords_, std::move(rows));
}

RatePolytope RatePolytope::with_coordinate(const std::string& name, std::size_t position, double lo,
                                           double hi) const {
    if (position > coords_.size()) {
        throw std::domain_error("coordinate position out of range");
    }
    std::vector<std::string> coords = coords_;
    coords.insert(coords.begin() + static_cast<std::ptrdiff_t>(position), name);
    std::vector<Halfspace> rows;
    for (const auto& r : rows_) {
        Halfspace h = r;
        h.coeffs.insert(h.coeffs.begin() + static_cast<std::ptrdiff_t>(position), 0.0);
        rows.push_back(std::move(h));
    }
    Halfspace upper{std::vector<double>(coords.size(), 0.0), hi};
    upper.coeffs[position] = 1.0;
    Halfspace lower{std::vector<double>(coords.size(), 0.0), -lo};
    lower.coeffs[position] = -1.0;
    rows.push_back(std::move(upper));
    rows.push_back(std::move(lower));
    return RatePolytope(std::move(coords), std::move(rows));
}

RatePolytope RatePolytope::reordered(const std::vector<std::string>& order) const {
    if (order.size() != coords_.size()) {
        throw std::domain_error("reordered: not a permutation of the coordinates");
    }
    std::vector<std::size_t> src;
    for (const auto& name : order) {
        src.push_back(index_of(name));
    }
    std::vector<Halfspace> rows;
    for (const auto& r : rows_) {
        Halfspace h{std::vector<double>(order.size()), r.bound};
        for (std::size_t j = 0; j < order.size(); ++j) {
            h.coeffs[j] = r.coeffs[src[j]];
        }
        rows.push_back(std::move(h));
    }
    return RatePolytope(order, std::move(rows));
}

bool is_empty(const RatePolytope& poly, double eps) {
    std::vector<double> b;
    const auto a = matrix_of(poly.rows(), b);
    const std::vector<double> zero(poly.dimension(), 0.0);
    return lp::solve(a, b, zero, eps).status == lp::Status::infeasible;
}

Optimum maximize(const RatePolytope& poly, std::span<const double> objective, double eps) {
    if (objective.size() != poly.dimension()) {
        throw std::domain_error("maximize: objective width does not match coordinate count");
    }
    std::vector<double> b;
    auto a = matrix_of(poly.rows(), b);
    auto sol = lp::solve(a, b, objective, eps);
    if (sol.status == lp::Status::infeasible) {
        throw InfeasibleError("maximize: empty polytope");
    }
    if (sol.status == lp::Status::unbounded) {
        throw UnboundedError("maximize: objective is unbounded");
    }
    Optimum out{sol.value, sol.x};

    // Lexicographic tie-break over the optimal face.
    std::vector<double> neg(objective.begin(), objective.end());
    for (double& c : neg) {
        c = -c;
    }
    a.push_back(neg);
    b.push_back(-(sol.value - slack_for(sol.value, kRoundingTol)));
    const std::size_t n = poly.dimension();
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<double> ej(n, 0.0);
        ej[j] = 1.0;
        const auto lex = lp::solve(a, b, ej, eps);
        if (lex.status != lp::Status::optimal) {
            break;
        }
        out.point = lex.x;
        ej[j] = -1.0;
        a.push_back(ej);
        b.push_back(-(lex.value - slack_for(lex.value, eps)));
    }
    return out;
}

Optimum row_support(const RatePolytope& poly, std::size_t row, double eps) {
    const auto& rows = poly.rows();
    if (row >= rows.size()) {
        throw std::domain_error("row_support: row index out of range");
    }
    std::vector<Halfspace> others;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i != row) {
            others.push_back(rows[i]);
        }
    }
    std::vector<double> b;
    const auto a = matrix_of(others, b);
    const auto sol = lp::solve(a, b, rows[row].coeffs, eps);
    if (sol.status == lp::Status::infeasible) {
        throw InfeasibleError("row_support: remaining rows are infeasible");
    }
    if (sol.status == lp::Status::unbounded) {
        return {std::numeric_limits<double>::infinity(), {}};
    }
    return {sol.value, sol.x};
}

bool is_row_redundant(const RatePolytope& poly, std::size_t row, double eps) {
    const auto support = row_support(poly, row, eps);
    const auto& h = poly.rows()[row];
    const double s = max_abs(h.coeffs);
    return support.value / s - h.bound / s <= slack_for(h.bound / s, kRoundingTol);
}

Redundancy remove_redundant(const RatePolytope& poly, double eps) {
    if (is_empty(poly, eps)) {
        throw InfeasibleError("remove_redundant: empty polytope");
    }
    const auto& rows = poly.rows();
    std::vector<Halfspace> norm;
    for (const auto& r : rows) {
        norm.push_back(normalized(r));
    }
    std::vector<std::size_t> order(rows.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        if (coeffs_less(norm[x], norm[y])) return true;
        if (coeffs_less(norm[y], norm[x])) return false;
        return norm[x].bound > norm[y].bound;
    });

    std::vector<bool> kept(rows.size(), true);
    for (std::size_t i : order) {
        std::vector<Halfspace> others;
        for (std::size_t k = 0; k < rows.size(); ++k) {
            if (k != i && kept[k]) {
                others.push_back(norm[k]);
            }
        }
        std::vector<double> b;
        const auto a = matrix_of(others, b);
        const auto sol = lp::solve(a, b, norm[i].coeffs, eps);
        if (sol.status == lp::Status::optimal &&
            sol.value - norm[i].bound <= slack_for(norm[i].bound, kRoundingTol)) {
            kept[i] = false;
        }
    }

    std::vector<Halfspace> out_rows;
    std::vector<std::size_t> removed;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (kept[i]) {
            out_rows.push_back(rows[i]);
        } else {
            removed.push_back(i);
        }
    }
    return {RatePolytope(poly.coords(), std::move(out_rows)), std::move(removed)};
}

RatePolytope eliminate(const RatePolytope& poly, const std::string& coord, double eps) {
    const std::size_t k = poly.index_of(coord);
    if (poly.dimension() == 1) {
        throw std::domain_error("eliminate: cannot eliminate the only coordinate");
    }
    const auto rows = normalize_and_dedupe(poly.rows(), eps);

    std::vector<const Halfspace*> pos, neg;
    std::vector<Halfspace> out;
    auto drop_k = [k](const std::vector<double>& c) {
        std::vector<double> r;
        r.reserve(c.size() - 1);
        for (std::size_t j = 0; j < c.size(); ++j) {
            if (j != k) r.push_back(c[j]);
        }
        return r;
    };
    for (const auto& r : rows) {
        if (r.coeffs[k] > 0) {
            pos.push_back(&r);
        } else if (r.coeffs[k] < 0) {
            neg.push_back(&r);
        } else {
            out.push_back({drop_k(r.coeffs), r.bound});
        }
    }
    for (const auto* p : pos) {
        for (const auto* q : neg) {
            const double wp = -q->coeffs[k];
            const double wq = p->coeffs[k];
            std::vector<double> c(p->coeffs.size());
            for (std::size_t j = 0; j < c.size(); ++j) {
                c[j] = wp * p->coeffs[j] + wq * q->coeffs[j];
            }
            out.push_back({drop_k(c), wp * p->bound + wq * q->bound});
        }
    }

    std::vector<std::string> coords;
    for (std::size_t j = 0; j < poly.dimension(); ++j) {
        if (j != k) coords.push_back(poly.coords()[j]);
    }
    RatePolytope projected(std::move(coords), normalize_and_dedupe(out, eps));
    return remove_redundant(projected, eps).polytope;
}

RatePolytope eliminate_all(RatePolytope poly, std::span<const std::string> coords, double eps) {
    for (const auto& c : coords) {
        poly = eliminate(poly, c, eps);
    }
    return poly;
}

void require_bounded(const RatePolytope& poly, double eps) {
    std::vector<double> b;
    const auto a = matrix_of(poly.rows(), b);
    for (std::size_t j = 0; j < poly.dimension(); ++j) {
        for (double sign : {1.0, -1.0}) {
            std::vector<double> c(poly.dimension(), 0.0);
            c[j] = sign;
            const auto sol = lp::solve(a, b, c, eps);
            if (sol.status == lp::Status::infeasible) {
                throw InfeasibleError("require_bounded: empty polytope");
            }
            if (sol.status == lp::Status::unbounded) {
                throw UnboundedError("coordinate " + poly.coords()[j] + " is unbounded");
            }
        }
    }
}

}  // namespace hkgic
