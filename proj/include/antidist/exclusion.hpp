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

// Antidistinguishability of finite state sets: verification of a candidate
// measurement, the projector-sum sufficient condition with its explicit
// measurement, the fidelity necessary condition, and the union and 2n
// superset constructions.

#pragma once

#include <span>
#include <utility>
#include <vector>

#include "antidist/linalg.hpp"
#include "antidist/states.hpp"

namespace antidist {

/// Pure states are distinguishable iff tr(P_j P_k) <= eps for all j != k.
bool is_distinguishable(const StateSet& set, Tolerance tol = {});

/// Outcome-swapped measurement for an orthonormal set (n >= 2):
/// M(j) = P_{j+1 mod n} + (1 - sum_k P_k) / n.
Povm swap_povm(const StateSet& set, Tolerance tol = {});

/// True iff every j has tr(rho_j M(j)) <= eps and sum_k tr(rho_k M(j)) > eps.
/// Throws CountMismatch or DimensionMismatch.
bool verify_antidistinguishing(std::span<const ComplexMatrix> states, const Povm& m, Tolerance tol = {});
bool verify_antidistinguishing(const StateSet& set, const Povm& m, Tolerance tol = {});
bool verify_antidistinguishing(const MixedStateSet& set, const Povm& m, Tolerance tol = {});

/// p_jk = tr(P_j P_k).
RealMatrix gram_overlaps(const StateSet& set);

/// Solves sum_k p_jk t_k = 1. The result is not clamped: negative entries are
/// how the sufficient condition reports failure. Throws SingularSystem.
std::vector<double> solve_weights(const StateSet& set);

struct SumConditionResult {
    std::vector<double> weights;
    ComplexMatrix projector_r;
    std::size_t rank_r = 0;
    bool satisfied = false;
    /// ||sum_j t_j P_j - R||_F
    double residual = 0.0;
};

/// Tests sum_j t_j P_j = R with R the projector onto the span of the states.
SumConditionResult check_sum_condition(const StateSet& set, std::span<const double> weights, Tolerance tol = {});

/// M(j) = t_j/(r-1) (R - P_j) + R^perp / n. Requires result.satisfied and
/// rank_r >= 2 (RankTooSmall otherwise).
Povm build_povm(const StateSet& set, const SumConditionResult& result, Tolerance tol = {});

/// Squared fidelity; equals tr(rho sigma) when either argument is pure.
double fidelity(const ComplexMatrix& rho, const ComplexMatrix& sigma, Tolerance tol = {});

struct FidelityBound {
    double lhs = 0.0;  // sum over ordered pairs j != k of F(rho_j, rho_k)
    double rhs = 0.0;  // n(n-2)
    bool violated = false;
};

/// Necessary condition sum_{j != k} F <= n(n-2); `violated` means the set is
/// certainly not antidistinguishable.
FidelityBound fidelity_bound_check(const StateSet& set, Tolerance tol = {});
FidelityBound fidelity_bound_check(const MixedStateSet& set, Tolerance tol = {});

/// Concatenates two disjoint antidistinguished sets and halves both
/// measurements. Throws OverlappingSets, or InvalidArgument when an input
/// measurement does not antidistinguish its set.
std::pair<MixedStateSet, Povm> union_povm(const MixedStateSet& a, const Povm& ma, const MixedStateSet& b,
                                          const Povm& mb, Tolerance tol = {});
std::pair<StateSet, Povm> union_povm(const StateSet& a, const Povm& ma, const StateSet& b, const Povm& mb,
                                     Tolerance tol = {});

enum class TwoNScaling {
    /// Every pair measurement scaled by 1/(number of pairs).
    Balanced,
    /// Left-to-right unions, halving at each step.
    Chained,
};

/// Superset {P_i, (1 - P_i)/(d-1)} of at most 2n states with an
/// antidistinguishing measurement. Pairs already present (possible only for
/// d = 2) are skipped. Throws DimensionOne.
std::pair<MixedStateSet, Povm> two_n_construction(const StateSet& set, TwoNScaling scaling = TwoNScaling::Balanced,
                                                  Tolerance tol = {});

}  // namespace antidist
