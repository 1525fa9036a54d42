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

// Exact decision and one-state completion for pure qubit sets, phrased in
// terms of Bloch vectors: the set is antidistinguishable iff some strictly
// positive weights make the Bloch vectors sum to zero.

#pragma once

#include <array>
#include <optional>
#include <vector>

#include "antidist/linalg.hpp"
#include "antidist/states.hpp"

namespace antidist {

struct BlochVector {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    double norm() const;
    BlochVector operator+(const BlochVector& o) const { return {x + o.x, y + o.y, z + o.z}; }
    BlochVector operator-() const { return {-x, -y, -z}; }
    BlochVector operator*(double s) const { return {x * s, y * s, z * s}; }
    double dot(const BlochVector& o) const { return x * o.x + y * o.y + z * o.z; }
};

/// The three Pauli matrices, in x, y, z order.
const std::array<ComplexMatrix, 3>& pauli_matrices();

/// r_k = tr(P sigma_k). Throws WrongDimension unless dim == 2.
BlochVector bloch_from_state(const PureState& p);
BlochVector bloch_from_density(const DensityMatrix& rho);
/// Pure state with the given (normalized) Bloch direction. Throws ZeroVector.
PureState state_from_bloch(const BlochVector& r);

struct QubitVerdict {
    bool feasible = false;
    /// Strictly positive, summing to 2, with sum_j t_j r_j = 0 (when feasible).
    std::optional<std::vector<double>> weights;
    std::optional<BlochVector> added_state;
    /// Optimal value of min_j t_j from the strict-feasibility LP.
    double margin = 0.0;
};

/// Strict-positivity threshold on the LP margin.
inline constexpr double kQubitMargin = 1e-9;

/// Maximizes eps subject to sum_j t_j r_j = 0, sum_j t_j = 2, t_j >= eps;
/// feasible iff the optimum exceeds 1e-9. Throws WrongDimension.
QubitVerdict qubit_decide(const StateSet& set);
/// Throws MixedStateInput when any member is not pure.
QubitVerdict qubit_decide(const MixedStateSet& set);

/// {t_j (1 - P_j)}. Throws InvalidArgument unless it is a valid POVM.
Povm qubit_povm(const StateSet& set, const std::vector<double>& weights, Tolerance tol = {});

/// Evidence-carrying certificate from a qubit verdict: AntidistYes with the
/// measurement above, or AntidistNo.
Certificate qubit_certificate(const StateSet& set, const QubitVerdict& verdict, Tolerance tol = {});

struct QubitCompletion {
    std::optional<PureState> added;
    StateSet enlarged;  // equals the input when nothing was added
    QubitVerdict verdict;
};

/// Adds the state with Bloch vector -r/|r|, r = sum_j r_j, when the set is not
/// already antidistinguishable. Throws WrongDimension.
QubitCompletion qubit_complete(const StateSet& set);

}  // namespace antidist
