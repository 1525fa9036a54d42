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

// Charts: for every state P_j an orthonormal completion P_j^2..P_j^d of the
// Hilbert space, plus coefficients alpha_j^k in [0, 1]. A chart whose
// weighted completions resolve the identity, and where every outcome fires
// on some state, is the same thing as an antidistinguishing measurement
// M(j) = sum_k alpha_j^k P_j^k.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "antidist/linalg.hpp"
#include "antidist/states.hpp"

namespace antidist {

struct Chart {
    StateSet states;
    /// completions[j][k], k = 0..d-2.
    std::vector<std::vector<PureState>> completions;
    /// alphas[j][k], paired with completions[j][k].
    std::vector<std::vector<double>> alphas;
};

/// Residuals of the individual chart conditions.
struct ChartCheck {
    bool shape_ok = false;
    double column_residual = 0.0;      // max_j ||P_j + sum_k P_j^k - 1||_F
    double resolution_residual = 0.0;  // ||sum_jk alpha_j^k P_j^k - 1||_F
    double min_response = 0.0;         // min_j sum_i sum_k alpha_j^k tr(P_i P_j^k)
    bool alphas_in_range = false;
    bool valid = false;
};

inline constexpr double kChartSlack = 1e-8;

ChartCheck inspect_chart(const Chart& chart, Tolerance tol = {});

/// All chart conditions hold. Throws ShapeMismatch on inconsistent sizes.
bool verify_chart(const Chart& chart, Tolerance tol = {});

/// M(j) = sum_k alpha_j^k P_j^k. Throws InvalidChart unless verify_chart.
Povm povm_from_chart(const Chart& chart, Tolerance tol = {});

/// Spectral decomposition of each M(j) on the orthocomplement of P_j.
/// Requires P_j M(j) = 0 within tolerance (InvalidArgument otherwise).
Chart chart_from_povm(const StateSet& set, const Povm& m, Tolerance tol = {});

/// Gram-Schmidt completion of each state against the other states of the set,
/// then the standard basis. For orthonormal sets this is the mutual completion.
std::vector<std::vector<PureState>> mutual_completions(const StateSet& set, Tolerance tol = {});

struct ChartSearchOptions {
    std::uint64_t budget = 10000;
    std::uint64_t seed = 0;
    /// Tried before anything else when present.
    std::optional<Chart> seed_chart;
    Tolerance tol{};
};

struct ChartSearchResult {
    std::optional<Chart> chart;
    std::uint64_t trials = 0;  // trials consumed
};

/// Heuristic search. Trial 0 uses the mutual completion; later trials mix each
/// completion by a Haar-random unitary drawn from a stream seeded by
/// (seed, trial). Coefficients come from nonnegative least squares on the
/// resolution of the identity. Failure carries no information about the set.
ChartSearchResult search_chart(const StateSet& set, const ChartSearchOptions& options = {});

ChartEvidence to_evidence(const Chart& chart);
/// Throws ShapeMismatch / state errors when the evidence does not fit `set`.
Chart chart_from_evidence(const StateSet& set, const ChartEvidence& evidence);

}  // namespace antidist
