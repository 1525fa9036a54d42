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

#include "antidist/states.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <utility>

namespace antidist {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::NonFinite: return "NonFinite";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::NonSquare: return "NonSquare";
        case ErrorKind::NonHermitian: return "NonHermitian";
        case ErrorKind::EmptyInput: return "EmptyInput";
        case ErrorKind::SingularSystem: return "SingularSystem";
        case ErrorKind::ZeroVector: return "ZeroVector";
        case ErrorKind::NormOutOfRange: return "NormOutOfRange";
        case ErrorKind::InvalidState: return "InvalidState";
        case ErrorKind::DuplicateState: return "DuplicateState";
        case ErrorKind::NotPsd: return "NotPsd";
        case ErrorKind::NotNormalized: return "NotNormalized";
        case ErrorKind::CountMismatch: return "CountMismatch";
        case ErrorKind::RankTooSmall: return "RankTooSmall";
        case ErrorKind::OverlappingSets: return "OverlappingSets";
        case ErrorKind::DimensionOne: return "DimensionOne";
        case ErrorKind::WrongDimension: return "WrongDimension";
        case ErrorKind::MixedStateInput: return "MixedStateInput";
        case ErrorKind::NotUnitary: return "NotUnitary";
        case ErrorKind::NotClosed: return "NotClosed";
        case ErrorKind::MissingIdentity: return "MissingIdentity";
        case ErrorKind::FixedPoint: return "FixedPoint";
        case ErrorKind::NotScalarOnSupport: return "NotScalarOnSupport";
        case ErrorKind::TooLarge: return "TooLarge";
        case ErrorKind::ShapeMismatch: return "ShapeMismatch";
        case ErrorKind::InvalidChart: return "InvalidChart";
        case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

PureState::PureState(CVector v) : vector_(std::move(v)), projector_(ComplexMatrix::outer(vector_)) {}

PureState PureState::from_vector(CVector v) {
    if (v.empty()) throw Error(ErrorKind::EmptyInput, "state vector has no entries");
    for (const Complex& z : v) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw Error(ErrorKind::NonFinite, "state vector contains NaN or Inf");
        }
    }
    const double len = norm(v);
    if (len == 0.0) throw Error(ErrorKind::ZeroVector, "state vector is zero");
    if (std::abs(len - 1.0) > kNormSlack) {
        throw Error(ErrorKind::NormOutOfRange, "state vector norm " + std::to_string(len) + " is not within 1e-6 of 1",
                    len);
    }
    for (Complex& z : v) z /= len;
    return PureState(std::move(v));
}

bool same_state(const PureState& a, const PureState& b) {
    return a.dim() == b.dim() && frobenius_distance(a.projector(), b.projector()) <= kSameStateDistance;
}

DensityMatrix DensityMatrix::from_matrix(ComplexMatrix m, Tolerance tol) {
    if (!m.is_square() || m.empty()) throw Error(ErrorKind::NonSquare, "density matrix must be square");
    if (!is_hermitian(m, tol)) throw Error(ErrorKind::InvalidState, "density matrix is not Hermitian");
    if (std::abs(trace(m) - Complex(1.0)) > tol.eps * static_cast<double>(m.rows()) + 1e-12) {
        throw Error(ErrorKind::InvalidState, "density matrix trace is not 1");
    }
    if (!is_psd(m, tol)) throw Error(ErrorKind::InvalidState, "density matrix is not positive semidefinite");
    return DensityMatrix(std::move(m));
}

DensityMatrix DensityMatrix::from_pure(const PureState& p) { return DensityMatrix(p.projector()); }

bool DensityMatrix::is_pure(Tolerance tol) const {
    return std::abs(trace(mat_mul(matrix_, matrix_)).real() - 1.0) <= tol.eps * 10.0;
}

Povm validate_povm(std::vector<ComplexMatrix> effects, Tolerance tol) {
    if (effects.empty()) throw Error(ErrorKind::EmptyInput, "POVM has no effects");
    const std::size_t dim = effects.front().rows();
    ComplexMatrix sum(dim, dim);
    for (std::size_t j = 0; j < effects.size(); ++j) {
        if (!effects[j].is_square() || effects[j].rows() != dim) {
            throw Error(ErrorKind::DimensionMismatch, "effect " + std::to_string(j) + " has the wrong shape", j);
        }
        if (!is_psd(effects[j], tol)) {
            throw Error(ErrorKind::NotPsd, "effect " + std::to_string(j) + " is not positive semidefinite", j);
        }
        sum += effects[j];
    }
    const double residual = max_abs_difference(sum, ComplexMatrix::identity(dim));
    if (residual > kPovmSumSlack) {
        throw Error(ErrorKind::NotNormalized, "effects sum to the identity only up to " + std::to_string(residual),
                    residual);
    }
    return Povm(dim, std::move(effects));
}

StateSet::StateSet(std::vector<PureState> states) : states_(std::move(states)) {
    if (states_.empty()) return;
    dim_ = states_.front().dim();
    for (std::size_t j = 0; j < states_.size(); ++j) {
        if (states_[j].dim() != dim_) {
            throw Error(ErrorKind::DimensionMismatch, "state " + std::to_string(j) + " has dimension " +
                                                          std::to_string(states_[j].dim()) + ", expected " +
                                                          std::to_string(dim_));
        }
        for (std::size_t k = 0; k < j; ++k) {
            if (same_state(states_[k], states_[j])) {
                throw Error(ErrorKind::DuplicateState,
                            "states " + std::to_string(k) + " and " + std::to_string(j) + " coincide", j);
            }
        }
    }
}

StateSet StateSet::from_vectors(std::vector<CVector> vectors) {
    std::vector<PureState> states;
    states.reserve(vectors.size());
    for (auto& v : vectors) states.push_back(PureState::from_vector(std::move(v)));
    return StateSet(std::move(states));
}

std::vector<CVector> StateSet::vectors() const {
    std::vector<CVector> out;
    out.reserve(states_.size());
    for (const auto& p : states_) out.push_back(p.vector());
    return out;
}

std::optional<std::size_t> StateSet::find(const PureState& p) const {
    for (std::size_t j = 0; j < states_.size(); ++j) {
        if (same_state(states_[j], p)) return j;
    }
    return std::nullopt;
}

MixedStateSet::MixedStateSet(std::vector<DensityMatrix> states) : states_(std::move(states)) {
    if (states_.empty()) return;
    dim_ = states_.front().dim();
    for (std::size_t j = 0; j < states_.size(); ++j) {
        if (states_[j].dim() != dim_) {
            throw Error(ErrorKind::DimensionMismatch, "state " + std::to_string(j) + " has the wrong dimension");
        }
        for (std::size_t k = 0; k < j; ++k) {
            if (frobenius_distance(states_[k].matrix(), states_[j].matrix()) <= kSameStateDistance) {
                throw Error(ErrorKind::DuplicateState,
                            "states " + std::to_string(k) + " and " + std::to_string(j) + " coincide", j);
            }
        }
    }
}

MixedStateSet MixedStateSet::from_pure(const StateSet& set) {
    std::vector<DensityMatrix> states;
    states.reserve(set.size());
    for (const auto& p : set.states()) states.push_back(DensityMatrix::from_pure(p));
    return MixedStateSet(std::move(states));
}

std::optional<std::size_t> MixedStateSet::find(const DensityMatrix& rho) const {
    for (std::size_t j = 0; j < states_.size(); ++j) {
        if (states_[j].dim() == rho.dim() &&
            frobenius_distance(states_[j].matrix(), rho.matrix()) <= kSameStateDistance) {
            return j;
        }
    }
    return std::nullopt;
}

namespace {

constexpr std::array<std::pair<Verdict, std::string_view>, 3> kVerdictNames{{
    {Verdict::AntidistYes, "AntidistYes"},
    {Verdict::AntidistNo, "AntidistNo"},
    {Verdict::Unknown, "Unknown"},
}};

constexpr std::array<std::pair<Method, std::string_view>, 8> kMethodNames{{
    {Method::PairwiseOrthogonal, "PairwiseOrthogonal"},
    {Method::SumProjection, "SumProjection"},
    {Method::QubitBloch, "QubitBloch"},
    {Method::Chart, "Chart"},
    {Method::GroupOrbit, "GroupOrbit"},
    {Method::FidelityViolation, "FidelityViolation"},
    {Method::Union, "Union"},
    {Method::TwoNConstruction, "TwoNConstruction"},
}};

}  // namespace

std::string_view to_string(Verdict v) {
    for (const auto& [value, name] : kVerdictNames) {
        if (value == v) return name;
    }
    return "Unknown";
}

std::string_view to_string(Method m) {
    for (const auto& [value, name] : kMethodNames) {
        if (value == m) return name;
    }
    return "Unknown";
}

std::optional<Verdict> parse_verdict(std::string_view s) {
    for (const auto& [value, name] : kVerdictNames) {
        if (name == s) return value;
    }
    return std::nullopt;
}

std::optional<Method> parse_method(std::string_view s) {
    for (const auto& [value, name] : kMethodNames) {
        if (name == s) return value;
    }
    return std::nullopt;
}

Certificate Certificate::yes(Method method, Povm povm, std::string notes) {
    Certificate c;
    c.verdict = Verdict::AntidistYes;
    c.method = method;
    c.povm = std::move(povm);
    c.notes = std::move(notes);
    return c;
}

Certificate Certificate::no(Method method, std::string notes) {
    if (method != Method::QubitBloch && method != Method::FidelityViolation) {
        throw Error(ErrorKind::InvalidArgument, "only QubitBloch and FidelityViolation can refute antidistinguishability");
    }
    Certificate c;
    c.verdict = Verdict::AntidistNo;
    c.method = method;
    c.notes = std::move(notes);
    return c;
}

Certificate Certificate::unknown(std::string notes) {
    Certificate c;
    c.notes = std::move(notes);
    return c;
}

}  // namespace antidist
