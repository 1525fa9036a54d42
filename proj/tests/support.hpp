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

// Shared fixtures for the test binaries.

#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "antidist/chart.hpp"
#include "antidist/linalg.hpp"
#include "antidist/qubit.hpp"
#include "antidist/states.hpp"

namespace antidist::testing {

inline const double kInvSqrt5 = 1.0 / std::sqrt(5.0);

/// Three states in C^3 with weights (3/4, 5/8, 5/8) and span diag(1,1,0).
inline StateSet overlap_triple() {
    return StateSet::from_vectors({{1.0, 0.0, 0.0}, {kInvSqrt5, 2.0 * kInvSqrt5, 0.0}, {kInvSqrt5, -2.0 * kInvSqrt5, 0.0}});
}

/// Three states in C^3 where the projector-sum condition fails but a chart exists.
inline StateSet chart_only_triple() {
    return StateSet::from_vectors({{1.0, 0.0, 0.0}, {kInvSqrt5, 2.0 * kInvSqrt5, 0.0}, {0.0, kInvSqrt5, 2.0 * kInvSqrt5}});
}

/// The reference chart for chart_only_triple(), stored [state][k].
inline Chart reference_chart() {
    const StateSet set = chart_only_triple();
    auto ps = [](CVector v) { return PureState::from_vector(std::move(v)); };
    std::vector<std::vector<PureState>> completions{
        {ps({0.0, 0.0, 1.0}), ps({0.0, 1.0, 0.0})},
        {ps({0.0, 0.0, 1.0}), ps({2.0 * kInvSqrt5, -kInvSqrt5, 0.0})},
        {ps({0.0, 2.0 * kInvSqrt5, -kInvSqrt5}), ps({1.0, 0.0, 0.0})},
    };
    // Row-per-k form: [[0,1,0],[1,0,1]].
    std::vector<std::vector<double>> alphas{{0.0, 1.0}, {1.0, 0.0}, {0.0, 1.0}};
    return Chart{set, std::move(completions), std::move(alphas)};
}

inline ComplexMatrix real_matrix(std::initializer_list<std::initializer_list<double>> rows, double scale = 1.0) {
    const std::size_t r = rows.size();
    const std::size_t c = rows.begin()->size();
    std::vector<Complex> entries;
    for (const auto& row : rows) {
        for (double x : row) entries.emplace_back(x * scale, 0.0);
    }
    return ComplexMatrix(r, c, std::move(entries));
}

inline CVector random_vector(std::size_t d, std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    CVector v(d);
    double n2 = 0.0;
    for (auto& z : v) {
        z = Complex(g(rng), g(rng));
        n2 += std::norm(z);
    }
    for (auto& z : v) z /= std::sqrt(n2);
    return v;
}

inline PureState random_state(std::size_t d, std::mt19937_64& rng) { return PureState::from_vector(random_vector(d, rng)); }

inline StateSet random_set(std::size_t n, std::size_t d, std::mt19937_64& rng) {
    std::vector<PureState> states;
    for (std::size_t j = 0; j < n; ++j) states.push_back(random_state(d, rng));
    return StateSet(std::move(states));
}

/// Columns of a Haar-random unitary.
inline std::vector<CVector> random_unitary_columns(std::size_t d, std::mt19937_64& rng) {
    std::vector<CVector> raw;
    for (std::size_t k = 0; k < d; ++k) raw.push_back(random_vector(d, rng));
    return orthonormal_basis(raw, Tolerance(1e-12));
}

inline ComplexMatrix random_hermitian(std::size_t d, std::mt19937_64& rng, double scale = 1.0) {
    std::normal_distribution<double> g;
    ComplexMatrix h(d, d);
    for (std::size_t r = 0; r < d; ++r) {
        h(r, r) = scale * g(rng);
        for (std::size_t c = r + 1; c < d; ++c) {
            h(r, c) = scale * Complex(g(rng), g(rng));
            h(c, r) = std::conj(h(r, c));
        }
    }
    return h;
}

/// Random pure-qubit set with n members, drawn until all are distinct.
inline StateSet random_qubit_set(std::size_t n, std::mt19937_64& rng) { return random_set(n, 2, rng); }

/// Random qubit set confined to the half sphere z > 0, hence never
/// antidistinguishable for n >= 1.
inline StateSet random_capped_qubit_set(std::size_t n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<PureState> states;
    while (states.size() < n) {
        BlochVector r{u(rng), u(rng), u(rng)};
        const double len = r.norm();
        if (len < 1e-3 || len > 1.0) continue;
        r = r * (1.0 / len);
        if (r.z < 0.05) continue;
        states.push_back(state_from_bloch(r));
    }
    return StateSet(std::move(states));
}

}  // namespace antidist::testing
