#include "hkgic/lp.hpp"

#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>

namespace hkgic::lp {

namespace {

constexpr double kPivotEps = 1e-12;

// Tableau for: maximize c.y s.t. A y <= b, y >= 0 (y = [x+, x-]).
// Rows 0..m-1 constraints, row m objective, row m+1 phase-one objective.
// Column n is the phase-one artificial, column n+1 the right-hand side.
class Tableau {
public:
    Tableau(const Matrix& a, std::span<const double> b, std::span<const double> c)
        : m_(static_cast<int>(b.size())),
          n_(static_cast<int>(2 * c.size())),
          basis_(m_),
          nonbasis_(n_ + 1),
          d_(m_ + 2, std::vector<double>(n_ + 2, 0.0)) {
        const int dim = static_cast<int>(c.size());
        for (int i = 0; i < m_; ++i) {
            for (int j = 0; j < dim; ++j) {
                d_[i][j] = a[i][j];
                d_[i][j + dim] = -a[i][j];
            }
            basis_[i] = n_ + i;
            d_[i][n_] = -1;
            d_[i][n_ + 1] = b[i];
        }
        for (int j = 0; j < dim; ++j) {
            d_[m_][j] = -c[j];
            d_[m_][j + dim] = c[j];
        }
        for (int j = 0; j < n_; ++j) {
            nonbasis_[j] = j;
        }
        nonbasis_[n_] = -1;
        d_[m_ + 1][n_] = 1;
    }

    Solution run(double feas_tol) {
        Solution out;
        int r = 0;
        for (int i = 1; i < m_; ++i) {
            if (d_[i][n_ + 1] < d_[r][n_ + 1]) {
                r = i;
            }
        }
        if (m_ > 0 && d_[r][n_ + 1] < -kPivotEps) {
            pivot(r, n_);
            if (!simplex(2) || d_[m_ + 1][n_ + 1] < -feas_tol) {
                out.status = Status::infeasible;
                return out;
            }
            for (int i = 0; i < m_; ++i) {
                if (basis_[i] != -1) {
                    continue;
                }
                int s = -1;
                for (int j = 0; j < n_; ++j) {
                    if (std::abs(d_[i][j]) > kPivotEps && (s == -1 || nonbasis_[j] < nonbasis_[s])) {
                        s = j;
                    }
                }
                if (s != -1) {
                    pivot(i, s);
                }
            }
        }
        if (!simplex(1)) {
            out.status = Status::unbounded;
            out.value = std::numeric_limits<double>::infinity();
            return out;
        }
        std::vector<double> y(n_, 0.0);
        for (int i = 0; i < m_; ++i) {
            if (basis_[i] >= 0 && basis_[i] < n_) {
                y[basis_[i]] = d_[i][n_ + 1];
            }
        }
        const int dim = n_ / 2;
        out.x.resize(dim);
        for (int j = 0; j < dim; ++j) {
            out.x[j] = y[j] - y[j + dim];
        }
        out.status = Status::optimal;
        out.value = d_[m_][n_ + 1];
        return out;
    }

private:
    void pivot(int r, int s) {
        const double inv = 1.0 / d_[r][s];
        for (int i = 0; i < m_ + 2; ++i) {
            if (i == r || std::abs(d_[i][s]) <= 0.0) {
                continue;
            }
            const double f = d_[i][s] * inv;
            for (int j = 0; j < n_ + 2; ++j) {
                d_[i][j] -= d_[r][j] * f;
            }
            d_[i][s] = -f;
        }
        for (int j = 0; j < n_ + 2; ++j) {
            d_[r][j] *= inv;
        }
        d_[r][s] = inv;
        std::swap(basis_[r], nonbasis_[s]);
    }

    // Bland's rule: smallest-index entering column, smallest-index leaving
    // row among ratio ties.
    bool simplex(int phase) {
        const int obj = m_ + phase - 1;
        const long max_iter = 50L * (m_ + n_ + 10) * (m_ + n_ + 10);
        for (long iter = 0; iter < max_iter; ++iter) {
            int s = -1;
            for (int j = 0; j <= n_; ++j) {
                if (nonbasis_[j] == -phase) {
                    continue;
                }
                if (d_[obj][j] < -kPivotEps && (s == -1 || nonbasis_[j] < nonbasis_[s])) {
                    s = j;
                }
            }
            if (s == -1) {
                return true;
            }
            int r = -1;
            double best = 0;
            for (int i = 0; i < m_; ++i) {
                if (d_[i][s] <= kPivotEps) {
                    continue;
                }
                const double ratio = d_[i][n_ + 1] / d_[i][s];
                if (r == -1 || ratio < best - kPivotEps ||
                    (ratio <= best + kPivotEps && basis_[i] < basis_[r])) {
                    r = i;
                    best = ratio;
                }
            }
            if (r == -1) {
                return false;
            }
            pivot(r, s);
        }
        throw std::runtime_error("lp::solve: iteration limit reached");
    }

    int m_;
    int n_;
    std::vector<int> basis_;
    std::vector<int> nonbasis_;
    Matrix d_;
};

}  // namespace

Solution solve(const Matrix& a, std::span<const double> b, std::span<const double> c, double feas_tol) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("lp::solve: row count mismatch");
    }
    for (const auto& row : a) {
        if (row.size() != c.size()) {
            throw std::invalid_argument("lp::solve: column count mismatch");
        }
    }
    return Tableau(a, b, c).run(feas_tol);
}

}  // namespace hkgic::lp
