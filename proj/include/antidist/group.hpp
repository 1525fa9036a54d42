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

// Antidistinguishable sets generated as orbits of a pure state under a finite
// unitary group. When the group acts irreducibly on the span of the orbit, the
// orbit projectors sum to a multiple of that span's projector, which is
// exactly the projector-sum condition with equal weights.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "antidist/linalg.hpp"
#include "antidist/states.hpp"

namespace antidist {

/// Closure is checked exactly, not up to a phase.
inline constexpr double kClosureDistance = 1e-7;

class GroupRep {
public:
    /// Validates unitarity, presence of the identity and closure under
    /// multiplication. Throws NotUnitary, MissingIdentity, NotClosed,
    /// DimensionMismatch, DuplicateState (repeated elements) or EmptyInput.
    GroupRep(std::vector<ComplexMatrix> elements, std::vector<std::string> labels = {}, Tolerance tol = {});

    std::size_t dim() const noexcept { return dim_; }
    std::size_t order() const noexcept { return elements_.size(); }
    const std::vector<ComplexMatrix>& elements() const noexcept { return elements_; }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const ComplexMatrix& operator[](std::size_t g) const { return elements_[g]; }

    /// Index k with U_k == U_g U_h.
    std::size_t multiply(std::size_t g, std::size_t h) const { return table_[g * elements_.size() + h]; }
    /// Index of the element within 1e-7 of `u`, if any.
    std::optional<std::size_t> find(const ComplexMatrix& u) const;

private:
    std::size_t dim_ = 0;
    std::vector<ComplexMatrix> elements_;
    std::vector<std::string> labels_;
    std::vector<std::size_t> table_;
};

struct Orbit {
    PureState base;
    StateSet members;
    /// For each member, the index of one group element mapping base onto it.
    std::vector<std::size_t> representatives;
    std::size_t stabilizer_order = 0;
};

/// U_g P U_g^* for every g, deduplicated. Throws FixedPoint when the orbit
/// has a single member, DimensionMismatch on a dimension clash.
Orbit orbit(const GroupRep& rep, const PureState& p, Tolerance tol = {});

/// Stabilizer subgroup I(P) as element indices.
std::vector<std::size_t> stabilizer(const GroupRep& rep, const PureState& p);

struct SchurSum {
    double c = 0.0;
    ComplexMatrix projector_r;
    std::size_t rank_r = 0;
};

/// Checks sum of orbit projectors == c R with R the span projector of the
/// orbit and c = |orbit| / tr R. Throws NotScalarOnSupport.
SchurSum schur_sum(const Orbit& orbit, Tolerance tol = {});

/// Equal weights 1/c fed to the projector-sum measurement.
Povm covariant_povm(const Orbit& orbit, const SchurSum& sum, Tolerance tol = {});

/// Group-indexed form: M(g) = d / (|G| (d-1)) U_g P^perp U_g^*, one effect per
/// element. Needs an irreducible action (span projector == identity).
std::vector<ComplexMatrix> covariant_effects_per_element(const GroupRep& rep, const PureState& p,
                                                         Tolerance tol = {});

/// Quaternion group {+-1, +-i, +-j, +-k} on C^2 with U(+-i) = +-i sigma_x,
/// U(+-j) = -+i sigma_y, U(+-k) = +-i sigma_z.
GroupRep builtin_quaternion();

/// All n! permutation matrices on C^n. Throws TooLarge for n > 6 and
/// InvalidArgument for n < 3.
GroupRep builtin_symmetric_permutation(int n);

/// Cyclic shifts on C^n (reducible; useful as a negative example).
GroupRep builtin_cyclic_shift(int n);

/// Orthonormal basis of {c in C^n : sum_j c_j = 0}; the first vector is
/// (1, -1, 0, ..., 0)/sqrt(2).
std::vector<CVector> standard_subspace_vectors(int n);

/// State with Bloch vector (1,1,1)/sqrt(3).
PureState tetrahedral_state();

}  // namespace antidist
