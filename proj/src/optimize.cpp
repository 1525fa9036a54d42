// Copyright 2026 The antidist Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "antidist/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace antidist {

namespace {

constexpr double kPivotEps = 1e-11;

// Dense tableau: rows 0..m-1 are constraints, last column is the rhs.
class Tableau {
public:
    Tableau(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), cells_(rows * cols, 0.0) {}
    double& at(std::size_t r, std::size_t c) { return cells_[r * cols_ + c]; }
    double at(std::size_t r, std::size_t c) const { return cells_[r * cols_ + c]; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    void pivot(std::size_t pr, std::size_t pc) {
        const double p = at(pr, pc);
        for (std::size_t c = 0; c < cols_; ++c) at(pr, c) /= p;
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == pr) continue;
            const double f = at(r, pc);
            if (f == 0.0) continue;
            for (std::size_t c = 0; c < cols_; ++c) at(r, c) -= f * at(pr, c);
        }
    }

    void drop_row(std::size_t r) {
        cells_.erase(cells_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                     cells_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
        --rows_;
    }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<double> cells_;
};

// Runs simplex iterations maximizing `cost` over columns [0, active_cols).
// Returns false when unbounded.
bool run_simplex(Tableau& t, std::vector<std::size_t>& basis, std::span<const double> cost,
                 std::size_t active_cols) {
    const std::size_t m = t.rows();
    const std::size_t rhs = t.cols() - 1;
    for (;;) {
        std::size_t entering = active_cols;
        for (std::size_t c = 0; c < active_cols; ++c) {
            if (std::find(basis.begin(), basis.end(), c) != basis.end()) continue;
            double reduced = cost[c];
            for (std::size_t r = 0; r < m; ++r) reduced -= cost[basis[r]] * t.at(r, c);
            if (reduced > kPivotEps) {
                entering = c;
                break;
            }
        }
        if (entering == active_cols) return true;

        std::size_t leaving = m;
        double best_ratio = std::numeric_limits<double>::infinity();
        for (std::size_t r = 0; r < m; ++r) {
            const double coeff = t.at(r, entering);
            if (coeff <= kPivotEps) continue;
            const double ratio = t.at(r, rhs) / coeff;
            if (ratio < best_ratio - 1e-14 ||
                (std::abs(ratio - best_ratio) <= 1e-14 && leaving < m && basis[r] < basis[leaving])) {
                best_ratio = ratio;
                leaving = r;
            }
        }
        if (leaving == m) return false;
        t.pivot(leaving, entering);
        basis[leaving] = entering;
    }
}

}  // namespace

LpResult maximize_lp(const RealMatrix& a, std::span<const double> b, std::span<const double> c) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    if (b.size() != m || c.size() != n) {
        throw Error(ErrorKind::DimensionMismatch, "maximize_lp shape mismatch");
    }

    // Columns: n structural, m artificial, then rhs.
    Tableau t(m, n + m + 1);
    std::vector<std::size_t> basis(m);
    for (std::size_t r = 0; r < m; ++r) {
        const double sign = b[r] < 0.0 ? -1.0 : 1.0;
        for (std::size_t col = 0; col < n; ++col) t.at(r, col) = sign * a(r, col);
        t.at(r, n + r) = 1.0;
        t.at(r, n + m) = sign * b[r];
        basis[r] = n + r;
    }

    std::vector<double> phase_one_cost(n + m, 0.0);
    for (std::size_t r = 0; r < m; ++r) phase_one_cost[n + r] = -1.0;
    run_simplex(t, basis, phase_one_cost, n + m);

    double infeasibility = 0.0;
    for (std::size_t r = 0; r < t.rows(); ++r) {
        if (basis[r] >= n) infeasibility += t.at(r, n + m);
    }
    double scale = 1.0;
    for (double v : b) scale = std::max(scale, std::abs(v));
    if (infeasibility > 1e-9 * scale) return {LpStatus::Infeasible, {}, 0.0};

    // Drive remaining (zero-valued) artificials out of the basis.
    for (std::size_t r = 0; r < t.rows();) {
        if (basis[r] < n) {
            ++r;
            continue;
        }
        std::size_t replacement = n;
        for (std::size_t col = 0; col < n; ++col) {
            if (std::find(basis.begin(), basis.end(), col) == basis.end() && std::abs(t.at(r, col)) > kPivotEps) {
                replacement = col;
                break;
            }
        }
        if (replacement == n) {
            t.drop_row(r);
            basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(r));
            continue;
        }
        t.pivot(r, replacement);
        basis[r] = replacement;
        ++r;
    }

    std::vector<double> cost(c.begin(), c.end());
    cost.resize(n + m, 0.0);
    if (!run_simplex(t, basis, cost, n)) return {LpStatus::Unbounded, {}, 0.0};

    LpResult out{LpStatus::Optimal, std::vector<double>(n, 0.0), 0.0};
    for (std::size_t r = 0; r < t.rows(); ++r) {
        if (basis[r] < n) out.x[basis[r]] = std::max(0.0, t.at(r, n + m));
    }
    for (std::size_t col = 0; col < n; ++col) out.objective += c[col] * out.x[col];
    return out;
}

std::vector<double> least_squares(const RealMatrix& a, std::span<const double> b) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    if (b.size() != m) throw Error(ErrorKind::DimensionMismatch, "least_squares rhs length");

    RealMatrix qr = a;
    std::vector<double> rhs(b.begin(), b.end());
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;

    double max_col = 0.0;
    for (std::size_t col = 0; col < n; ++col) {
        double s = 0.0;
        for (std::size_t r = 0; r < m; ++r) s += qr(r, col) * qr(r, col);
        max_col = std::max(max_col, std::sqrt(s));
    }
    const double rank_floor = 1e-12 * std::max(1.0, max_col);

    // Householder QR with column pivoting.
    std::size_t rank = 0;
    for (std::size_t k = 0; k < std::min(m, n); ++k) {
        std::size_t best = k;
        double best_norm = -1.0;
        for (std::size_t col = k; col < n; ++col) {
            double s = 0.0;
            for (std::size_t r = k; r < m; ++r) s += qr(r, col) * qr(r, col);
            if (s > best_norm) {
                best_norm = s;
                best = col;
            }
        }
        if (std::sqrt(best_norm) <= rank_floor) break;
        if (best != k) {
            for (std::size_t r = 0; r < m; ++r) std::swap(qr(r, k), qr(r, best));
            std::swap(perm[k], perm[best]);
        }
        const double alpha = (qr(k, k) >= 0.0 ? -1.0 : 1.0) * std::sqrt(best_norm);
        std::vector<double> v(m, 0.0);
        for (std::size_t r = k; r < m; ++r) v[r] = qr(r, k);
        v[k] -= alpha;
        double vnorm2 = 0.0;
        for (std::size_t r = k; r < m; ++r) vnorm2 += v[r] * v[r];
        if (vnorm2 > 0.0) {
            for (std::size_t col = k; col < n; ++col) {
                double dot = 0.0;
                for (std::size_t r = k; r < m; ++r) dot += v[r] * qr(r, col);
                const double f = 2.0 * dot / vnorm2;
                for (std::size_t r = k; r < m; ++r) qr(r, col) -= f * v[r];
            }
            double dot = 0.0;
            for (std::size_t r = k; r < m; ++r) dot += v[r] * rhs[r];
            const double f = 2.0 * dot / vnorm2;
            for (std::size_t r = k; r < m; ++r) rhs[r] -= f * v[r];
        }
        ++rank;
    }

    std::vector<double> z(n, 0.0);
    for (std::size_t i = rank; i-- > 0;) {
        double acc = rhs[i];
        for (std::size_t col = i + 1; col < rank; ++col) acc -= qr(i, col) * z[col];
        z[i] = acc / qr(i, i);
    }
    std::vector<double> x(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) x[perm[i]] = z[i];
    return x;
}

NnlsResult nnls(const RealMatrix& a, std::span<const double> b, int max_iterations) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    if (b.size() != m) throw Error(ErrorKind::DimensionMismatch, "nnls rhs length");
    if (max_iterations <= 0) max_iterations = static_cast<int>(3 * n + 10);

    std::vector<double> x(n, 0.0);
    std::vector<bool> passive(n, false);

    auto residual = [&](const std::vector<double>& v) {
        auto ax = mat_vec(a, v);
        for (std::size_t r = 0; r < m; ++r) ax[r] = b[r] - ax[r];
        return ax;
    };
    auto solve_passive = [&]() {
        std::vector<std::size_t> cols;
        for (std::size_t j = 0; j < n; ++j) {
            if (passive[j]) cols.push_back(j);
        }
        RealMatrix sub(m, cols.size());
        for (std::size_t r = 0; r < m; ++r) {
            for (std::size_t k = 0; k < cols.size(); ++k) sub(r, k) = a(r, cols[k]);
        }
        const auto zs = least_squares(sub, b);
        std::vector<double> z(n, 0.0);
        for (std::size_t k = 0; k < cols.size(); ++k) z[cols[k]] = zs[k];
        return z;
    };

    double scale = 1.0;
    for (double v : a.entries()) scale = std::max(scale, std::abs(v));
    const double grad_tol = 1e-12 * scale * static_cast<double>(std::max(m, n));

    for (int iter = 0; iter < max_iterations; ++iter) {
        const auto res = residual(x);
        std::size_t entering = n;
        double best = grad_tol;
        for (std::size_t j = 0; j < n; ++j) {
            if (passive[j]) continue;
            double g = 0.0;
            for (std::size_t r = 0; r < m; ++r) g += a(r, j) * res[r];
            if (g > best) {
                best = g;
                entering = j;
            }
        }
        if (entering == n) break;
        passive[entering] = true;

        for (;;) {
            auto z = solve_passive();
            bool feasible = true;
            for (std::size_t j = 0; j < n; ++j) {
                if (passive[j] && z[j] <= 0.0) feasible = false;
            }
            if (feasible) {
                x = std::move(z);
                break;
            }
            double step = 1.0;
            for (std::size_t j = 0; j < n; ++j) {
                if (passive[j] && z[j] <= 0.0) {
                    const double denom = x[j] - z[j];
                    if (denom > 0.0) step = std::min(step, x[j] / denom);
                }
            }
            for (std::size_t j = 0; j < n; ++j) {
                if (passive[j]) x[j] += step * (z[j] - x[j]);
            }
            for (std::size_t j = 0; j < n; ++j) {
                if (passive[j] && x[j] <= 1e-15) {
                    passive[j] = false;
                    x[j] = 0.0;
                }
            }
        }
    }

    const auto res = residual(x);
    double sum = 0.0;
    for (double v : res) sum += v * v;
    return {std::move(x), std::sqrt(sum)};
}

}  // namespace antidist
