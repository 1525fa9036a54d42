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

#include "antidist/chart.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "antidist/optimize.hpp"

namespace antidist {

namespace {

constexpr double kNnlsAccept = 1e-7;

bool shape_matches(const Chart& chart) {
    const std::size_t n = chart.states.size();
    const std::size_t d = chart.states.dim();
    if (n == 0 || d < 2) return false;
    if (chart.completions.size() != n || chart.alphas.size() != n) return false;
    for (std::size_t j = 0; j < n; ++j) {
        if (chart.completions[j].size() != d - 1 || chart.alphas[j].size() != d - 1) return false;
        for (const auto& q : chart.completions[j]) {
            if (q.dim() != d) return false;
        }
    }
    return true;
}

// Real coordinates of a Hermitian matrix such that the Euclidean norm of the
// coordinates equals the Frobenius norm.
std::vector<double> hermitian_coordinates(const ComplexMatrix& h) {
    const std::size_t d = h.rows();
    std::vector<double> out;
    out.reserve(d * d);
    for (std::size_t r = 0; r < d; ++r) out.push_back(h(r, r).real());
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = r + 1; c < d; ++c) {
            out.push_back(std::sqrt(2.0) * h(r, c).real());
            out.push_back(std::sqrt(2.0) * h(r, c).imag());
        }
    }
    return out;
}

// Columns of a Haar-random unitary of size m (Gram-Schmidt of a complex
// Ginibre matrix; the positive diagonal of R makes the result Haar).
std::vector<CVector> haar_unitary_columns(std::size_t m, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<CVector> columns;
    while (columns.size() < m) {
        CVector g(m);
        for (auto& z : g) z = Complex(gauss(rng), gauss(rng));
        std::vector<CVector> trial = columns;
        trial.push_back(std::move(g));
        auto basis = orthonormal_basis(trial, Tolerance(1e-12));
        if (basis.size() == columns.size() + 1) columns = std::move(basis);
    }
    return columns;
}

std::mt19937_64 trial_stream(std::uint64_t seed, std::uint64_t trial) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
    return std::mt19937_64(seq);
}

// Solves for alpha in [0, 1] given fixed completions. Nonnegative least
// squares screens out completions that cannot resolve the identity; an LP then
// maximizes the smallest outcome response. nullopt when either step fails.
std::optional<Chart> fit_alphas(const StateSet& set, std::vector<std::vector<PureState>> completions,
                                Tolerance tol) {
    const std::size_t n = set.size();
    const std::size_t d = set.dim();
    const std::size_t unknowns = n * (d - 1);
    const std::size_t coords = d * d;
    RealMatrix a(coords, unknowns);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k + 1 < d; ++k) {
            const auto h = hermitian_coordinates(completions[j][k].projector());
            for (std::size_t r = 0; r < h.size(); ++r) a(r, j * (d - 1) + k) = h[r];
        }
    }
    const auto target = hermitian_coordinates(ComplexMatrix::identity(d));
    if (!(nnls(a, target).residual_norm <= kNnlsAccept)) return std::nullopt;

    // Variables: alpha (unknowns), upper slacks (unknowns), eps, response slacks (n).
    const std::size_t vars = 2 * unknowns + 1 + n;
    const std::size_t eps_col = 2 * unknowns;
    RealMatrix lp(coords + unknowns + n, vars);
    std::vector<double> rhs(coords + unknowns + n, 0.0);
    for (std::size_t r = 0; r < coords; ++r) {
        for (std::size_t u = 0; u < unknowns; ++u) lp(r, u) = a(r, u);
        rhs[r] = target[r];
    }
    for (std::size_t u = 0; u < unknowns; ++u) {
        lp(coords + u, u) = 1.0;
        lp(coords + u, unknowns + u) = 1.0;
        rhs[coords + u] = 1.0;
    }
    for (std::size_t j = 0; j < n; ++j) {
        const std::size_t row = coords + unknowns + j;
        for (std::size_t k = 0; k + 1 < d; ++k) {
            double response = 0.0;
            for (const auto& p : set.states()) {
                response += std::norm(inner(p.vector(), completions[j][k].vector()));
            }
            lp(row, j * (d - 1) + k) = response;
        }
        lp(row, eps_col) = -1.0;
        lp(row, eps_col + 1 + j) = -1.0;
    }
    std::vector<double> objective(vars, 0.0);
    objective[eps_col] = 1.0;
    const LpResult best = maximize_lp(lp, rhs, objective);
    if (best.status != LpStatus::Optimal || !(best.objective > tol.eps)) return std::nullopt;

    Chart chart{set, std::move(completions), std::vector<std::vector<double>>(n, std::vector<double>(d - 1))};
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k + 1 < d; ++k) chart.alphas[j][k] = std::clamp(best.x[j * (d - 1) + k], 0.0, 1.0);
    }
    if (!verify_chart(chart, tol)) return std::nullopt;
    return chart;
}

std::vector<std::vector<PureState>> mix_completions(const std::vector<std::vector<PureState>>& base,
                                                    std::mt19937_64& rng) {
    std::vector<std::vector<PureState>> out;
    out.reserve(base.size());
    for (const auto& column : base) {
        const std::size_t m = column.size();
        const auto u = haar_unitary_columns(m, rng);
        std::vector<PureState> mixed;
        mixed.reserve(m);
        for (std::size_t k = 0; k < m; ++k) {
            CVector v(column.front().dim(), 0.0);
            for (std::size_t l = 0; l < m; ++l) {
                for (std::size_t r = 0; r < v.size(); ++r) v[r] += u[k][l] * column[l].vector()[r];
            }
            mixed.push_back(PureState::from_vector(std::move(v)));
        }
        out.push_back(std::move(mixed));
    }
    return out;
}

bool same_states(const StateSet& a, const StateSet& b) {
    if (a.size() != b.size() || a.dim() != b.dim()) return false;
    for (std::size_t j = 0; j < a.size(); ++j) {
        if (!same_state(a[j], b[j])) return false;
    }
    return true;
}

}  // namespace

ChartCheck inspect_chart(const Chart& chart, Tolerance tol) {
    ChartCheck out;
    out.shape_ok = shape_matches(chart);
    if (!out.shape_ok) return out;

    const std::size_t n = chart.states.size();
    const std::size_t d = chart.states.dim();
    const ComplexMatrix id = ComplexMatrix::identity(d);

    ComplexMatrix resolution(d, d);
    out.alphas_in_range = true;
    out.min_response = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < n; ++j) {
        ComplexMatrix column = chart.states[j].projector();
        double response = 0.0;
        for (std::size_t k = 0; k + 1 < d; ++k) {
            const PureState& q = chart.completions[j][k];
            const double alpha = chart.alphas[j][k];
            column += q.projector();
            resolution += alpha * q.projector();
            if (!(alpha >= -tol.eps && alpha <= 1.0 + tol.eps)) out.alphas_in_range = false;
            for (const auto& p : chart.states.states()) response += alpha * std::norm(inner(p.vector(), q.vector()));
        }
        out.column_residual = std::max(out.column_residual, frobenius_distance(column, id));
        out.min_response = std::min(out.min_response, response);
    }
    out.resolution_residual = frobenius_distance(resolution, id);
    out.valid = out.column_residual <= kChartSlack && out.resolution_residual <= kChartSlack &&
                out.min_response > tol.eps && out.alphas_in_range;
    return out;
}

bool verify_chart(const Chart& chart, Tolerance tol) {
    if (!shape_matches(chart)) {
        throw Error(ErrorKind::ShapeMismatch, "chart needs n columns of d-1 completion states and coefficients");
    }
    return inspect_chart(chart, tol).valid;
}

Povm povm_from_chart(const Chart& chart, Tolerance tol) {
    if (!shape_matches(chart) || !inspect_chart(chart, tol).valid) {
        throw Error(ErrorKind::InvalidChart, "chart does not satisfy the completion conditions");
    }
    const std::size_t d = chart.states.dim();
    std::vector<ComplexMatrix> effects;
    effects.reserve(chart.states.size());
    for (std::size_t j = 0; j < chart.states.size(); ++j) {
        ComplexMatrix m(d, d);
        for (std::size_t k = 0; k + 1 < d; ++k) {
            m += std::clamp(chart.alphas[j][k], 0.0, 1.0) * chart.completions[j][k].projector();
        }
        effects.push_back(std::move(m));
    }
    return validate_povm(std::move(effects), tol);
}

Chart chart_from_povm(const StateSet& set, const Povm& m, Tolerance tol) {
    if (m.size() != set.size()) throw Error(ErrorKind::CountMismatch, "effect count differs from state count");
    const std::size_t d = set.dim();
    if (m.dim() != d) throw Error(ErrorKind::DimensionMismatch, "POVM and states live in different dimensions");

    Chart chart{set, {}, {}};
    for (std::size_t j = 0; j < set.size(); ++j) {
        const CVector& psi = set[j].vector();
        const CVector m_psi = mat_vec(m[j], psi);
        if (inner(psi, m_psi).real() > tol.eps) {
            throw Error(ErrorKind::InvalidArgument, "effect " + std::to_string(j) + " does not exclude its state", j);
        }
        const std::vector<CVector> psi_only{psi};
        const auto frame = orthonormal_complement(psi_only, d, tol);

        // Compress M(j) onto the orthocomplement of psi and diagonalize there.
        const std::size_t r = frame.size();
        ComplexMatrix compressed(r, r);
        for (std::size_t a = 0; a < r; ++a) {
            const CVector ma = mat_vec(m[j], frame[a]);
            for (std::size_t b = 0; b < r; ++b) compressed(b, a) = inner(frame[b], ma);
        }
        compressed = (compressed + adjoint(compressed)) * 0.5;
        const auto eig = hermitian_eigen(compressed, tol);

        std::vector<PureState> completion;
        std::vector<double> alphas;
        for (std::size_t k = 0; k < r; ++k) {
            CVector v(d, 0.0);
            for (std::size_t a = 0; a < r; ++a) {
                for (std::size_t row = 0; row < d; ++row) v[row] += eig.vectors(a, k) * frame[a][row];
            }
            completion.push_back(PureState::from_vector(std::move(v)));
            alphas.push_back(std::clamp(eig.values[k], 0.0, 1.0));
        }
        chart.completions.push_back(std::move(completion));
        chart.alphas.push_back(std::move(alphas));
    }
    return chart;
}

std::vector<std::vector<PureState>> mutual_completions(const StateSet& set, Tolerance tol) {
    const std::size_t d = set.dim();
    const Tolerance keep(std::max(tol.eps, 1e-6));
    std::vector<std::vector<PureState>> out;
    out.reserve(set.size());
    for (std::size_t j = 0; j < set.size(); ++j) {
        std::vector<CVector> ordered{set[j].vector()};
        for (std::size_t i = 0; i < set.size(); ++i) {
            if (i != j) ordered.push_back(set[i].vector());
        }
        auto basis = orthonormal_basis(ordered, keep);
        if (basis.size() > d) basis.resize(d);
        const auto rest = orthonormal_complement(basis, d, keep);
        basis.insert(basis.end(), rest.begin(), rest.end());

        std::vector<PureState> completion;
        for (std::size_t k = 1; k < basis.size(); ++k) completion.push_back(PureState::from_vector(basis[k]));
        out.push_back(std::move(completion));
    }
    return out;
}

ChartSearchResult search_chart(const StateSet& set, const ChartSearchOptions& options) {
    ChartSearchResult result;
    if (set.empty() || set.dim() < 2) {
        throw Error(ErrorKind::InvalidArgument, "chart search needs states in dimension >= 2");
    }
    const Tolerance tol = options.tol;

    if (options.seed_chart) {
        if (!same_states(options.seed_chart->states, set)) {
            throw Error(ErrorKind::ShapeMismatch, "seed chart belongs to a different state set");
        }
        ++result.trials;
        if (shape_matches(*options.seed_chart) && verify_chart(*options.seed_chart, tol)) {
            result.chart = *options.seed_chart;
            return result;
        }
    }

    const auto base = mutual_completions(set, tol);
    for (std::uint64_t trial = 0; trial < options.budget; ++trial) {
        ++result.trials;
        std::optional<Chart> found;
        if (trial == 0) {
            found = fit_alphas(set, base, tol);
        } else {
            auto rng = trial_stream(options.seed, trial);
            found = fit_alphas(set, mix_completions(base, rng), tol);
        }
        if (found) {
            result.chart = std::move(found);
            return result;
        }
    }
    return result;
}

ChartEvidence to_evidence(const Chart& chart) {
    ChartEvidence ev;
    for (const auto& column : chart.completions) {
        std::vector<CVector> vectors;
        for (const auto& q : column) vectors.push_back(q.vector());
        ev.completions.push_back(std::move(vectors));
    }
    ev.alphas = chart.alphas;
    return ev;
}

Chart chart_from_evidence(const StateSet& set, const ChartEvidence& evidence) {
    if (evidence.completions.size() != set.size() || evidence.alphas.size() != set.size()) {
        throw Error(ErrorKind::ShapeMismatch, "chart column count differs from state count");
    }
    Chart chart{set, {}, evidence.alphas};
    for (const auto& column : evidence.completions) {
        std::vector<PureState> states;
        for (const auto& v : column) states.push_back(PureState::from_vector(v));
        chart.completions.push_back(std::move(states));
    }
    if (!shape_matches(chart)) throw Error(ErrorKind::ShapeMismatch, "chart columns need d-1 entries each");
    return chart;
}

}  // namespace antidist
