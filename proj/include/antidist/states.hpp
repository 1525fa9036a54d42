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

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "antidist/linalg.hpp"

namespace antidist {

/// Projector Frobenius distance at or below which two states count as equal.
inline constexpr double kSameStateDistance = 1e-7;
/// Allowed deviation of an input vector's norm from 1.
inline constexpr double kNormSlack = 1e-6;
/// Entrywise slack on sum_j M(j) = 1.
inline constexpr double kPovmSumSlack = 1e-8;

/// A unit vector together with its rank-1 projector. Two PureStates that
/// differ by a global phase have identical projectors; comparisons go through
/// the projector.
class PureState {
public:
    /// Renormalizes `v` exactly. Throws ZeroVector, or NormOutOfRange when
    /// | ||v|| - 1 | > 1e-6.
    static PureState from_vector(CVector v);

    std::size_t dim() const noexcept { return vector_.size(); }
    const CVector& vector() const noexcept { return vector_; }
    const ComplexMatrix& projector() const noexcept { return projector_; }

private:
    explicit PureState(CVector v);

    CVector vector_;
    ComplexMatrix projector_;
};

inline PureState pure_from_vector(CVector v) { return PureState::from_vector(std::move(v)); }

bool same_state(const PureState& a, const PureState& b);

class DensityMatrix {
public:
    /// Validates Hermitian, PSD and unit trace within `tol`.
    static DensityMatrix from_matrix(ComplexMatrix m, Tolerance tol = {});
    static DensityMatrix from_pure(const PureState& p);

    std::size_t dim() const noexcept { return matrix_.rows(); }
    const ComplexMatrix& matrix() const noexcept { return matrix_; }
    /// tr(rho^2) within tolerance of 1.
    bool is_pure(Tolerance tol = {}) const;

private:
    explicit DensityMatrix(ComplexMatrix m) : matrix_(std::move(m)) {}
    ComplexMatrix matrix_;
};

class Povm {
public:
    std::size_t dim() const noexcept { return dim_; }
    std::size_t size() const noexcept { return effects_.size(); }
    const std::vector<ComplexMatrix>& effects() const noexcept { return effects_; }
    const ComplexMatrix& operator[](std::size_t j) const { return effects_[j]; }

    friend Povm validate_povm(std::vector<ComplexMatrix> effects, Tolerance tol);

private:
    Povm(std::size_t dim, std::vector<ComplexMatrix> effects) : dim_(dim), effects_(std::move(effects)) {}
    std::size_t dim_ = 0;
    std::vector<ComplexMatrix> effects_;
};

/// Throws NotPsd (with the effect index) or NotNormalized (with the largest
/// entrywise deviation of the sum from the identity).
Povm validate_povm(std::vector<ComplexMatrix> effects, Tolerance tol = {});

/// Distinct pure states of a common dimension.
class StateSet {
public:
    StateSet() = default;
    /// Throws DimensionMismatch or DuplicateState.
    explicit StateSet(std::vector<PureState> states);
    static StateSet from_vectors(std::vector<CVector> vectors);

    std::size_t dim() const noexcept { return dim_; }
    std::size_t size() const noexcept { return states_.size(); }
    bool empty() const noexcept { return states_.empty(); }
    const std::vector<PureState>& states() const noexcept { return states_; }
    const PureState& operator[](std::size_t j) const { return states_[j]; }
    std::vector<CVector> vectors() const;

    /// Index of a member equal to `p` (projector distance <= 1e-7), if any.
    std::optional<std::size_t> find(const PureState& p) const;

private:
    std::size_t dim_ = 0;
    std::vector<PureState> states_;
};

/// Distinct density operators of a common dimension. Only the 2n superset
/// construction produces these; decision procedures take StateSet.
class MixedStateSet {
public:
    MixedStateSet() = default;
    explicit MixedStateSet(std::vector<DensityMatrix> states);
    static MixedStateSet from_pure(const StateSet& set);

    std::size_t dim() const noexcept { return dim_; }
    std::size_t size() const noexcept { return states_.size(); }
    const std::vector<DensityMatrix>& states() const noexcept { return states_; }
    const DensityMatrix& operator[](std::size_t j) const { return states_[j]; }
    std::optional<std::size_t> find(const DensityMatrix& rho) const;

private:
    std::size_t dim_ = 0;
    std::vector<DensityMatrix> states_;
};

enum class Verdict { AntidistYes, AntidistNo, Unknown };

enum class Method {
    PairwiseOrthogonal,
    SumProjection,
    QubitBloch,
    Chart,
    GroupOrbit,
    FidelityViolation,
    Union,
    TwoNConstruction,
};

std::string_view to_string(Verdict v);
std::string_view to_string(Method m);
std::optional<Verdict> parse_verdict(std::string_view s);
std::optional<Method> parse_method(std::string_view s);

/// Completion vectors and coefficients of a chart, indexed [state][k].
struct ChartEvidence {
    std::vector<std::vector<CVector>> completions;
    std::vector<std::vector<double>> alphas;
};

struct FidelityEvidence {
    double lhs = 0.0;
    double rhs = 0.0;
};

/// Verdict plus whatever evidence the deciding pathway produced.
struct Certificate {
    Verdict verdict = Verdict::Unknown;
    std::optional<Method> method;
    std::optional<std::vector<double>> weights;
    std::optional<ComplexMatrix> projector_r;
    std::optional<Povm> povm;
    std::optional<std::vector<double>> bloch_weights;
    std::optional<ChartEvidence> chart;
    std::optional<FidelityEvidence> fidelity;
    std::string notes;

    static Certificate yes(Method method, Povm povm, std::string notes = {});
    /// Throws InvalidArgument unless `method` is QubitBloch or FidelityViolation.
    static Certificate no(Method method, std::string notes = {});
    static Certificate unknown(std::string notes = {});
};

}  // namespace antidist
