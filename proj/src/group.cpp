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

#include "antidist/group.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "antidist/exclusion.hpp"
#include "antidist/qubit.hpp"

namespace antidist {

namespace {

constexpr double kSchurSlack = 1e-8;

PureState conjugate(const ComplexMatrix& u, const PureState& p) { return PureState::from_vector(mat_vec(u, p.vector())); }

}  // namespace

GroupRep::GroupRep(std::vector<ComplexMatrix> elements, std::vector<std::string> labels, Tolerance tol)
    : elements_(std::move(elements)), labels_(std::move(labels)) {
    if (elements_.empty()) throw Error(ErrorKind::EmptyInput, "a group needs at least one element");
    dim_ = elements_.front().rows();
    if (!labels_.empty() && labels_.size() != elements_.size()) {
        throw Error(ErrorKind::CountMismatch, "label count differs from element count");
    }
    if (labels_.empty()) {
        for (std::size_t g = 0; g < elements_.size(); ++g) labels_.push_back("g" + std::to_string(g));
    }
    const ComplexMatrix id = ComplexMatrix::identity(dim_);
    for (std::size_t g = 0; g < elements_.size(); ++g) {
        const auto& u = elements_[g];
        if (!u.is_square() || u.rows() != dim_) {
            throw Error(ErrorKind::DimensionMismatch, "element " + std::to_string(g) + " has the wrong shape", g);
        }
        if (frobenius_distance(adjoint(u) * u, id) > tol.eps) {
            throw Error(ErrorKind::NotUnitary, "element " + std::to_string(g) + " is not unitary", g);
        }
        for (std::size_t h = 0; h < g; ++h) {
            if (frobenius_distance(elements_[h], u) <= kClosureDistance) {
                throw Error(ErrorKind::DuplicateState, "elements " + std::to_string(h) + " and " +
                                                           std::to_string(g) + " coincide", g);
            }
        }
    }
    if (!find(id)) throw Error(ErrorKind::MissingIdentity, "the identity is not an element");

    const std::size_t n = elements_.size();
    table_.resize(n * n);
    for (std::size_t g = 0; g < n; ++g) {
        for (std::size_t h = 0; h < n; ++h) {
            const auto k = find(elements_[g] * elements_[h]);
            if (!k) {
                throw Error(ErrorKind::NotClosed,
                            "product " + labels_[g] + "*" + labels_[h] + " is not an element");
            }
            table_[g * n + h] = *k;
        }
    }
}

std::optional<std::size_t> GroupRep::find(const ComplexMatrix& u) const {
    for (std::size_t g = 0; g < elements_.size(); ++g) {
        if (frobenius_distance(elements_[g], u) <= kClosureDistance) return g;
    }
    return std::nullopt;
}

Orbit orbit(const GroupRep& rep, const PureState& p, Tolerance /*tol*/) {
    if (p.dim() != rep.dim()) {
        throw Error(ErrorKind::DimensionMismatch, "state and representation dimensions differ");
    }
    // Breadth-first from the base state, every element acting as a generator.
    std::vector<PureState> members{p};
    std::vector<std::size_t> reps{*rep.find(ComplexMatrix::identity(rep.dim()))};
    for (std::size_t frontier = 0; frontier < members.size(); ++frontier) {
        for (std::size_t g = 0; g < rep.order(); ++g) {
            PureState image = conjugate(rep[g], members[frontier]);
            const bool known = std::any_of(members.begin(), members.end(),
                                           [&](const PureState& m) { return same_state(m, image); });
            if (known) continue;
            members.push_back(std::move(image));
            reps.push_back(rep.multiply(g, reps[frontier]));
        }
    }
    if (members.size() == 1) throw Error(ErrorKind::FixedPoint, "the state is fixed by every group element");
    if (rep.order() % members.size() != 0) {
        throw std::logic_error("orbit size does not divide the group order");
    }
    const std::size_t stab = rep.order() / members.size();
    return Orbit{p, StateSet(std::move(members)), std::move(reps), stab};
}

std::vector<std::size_t> stabilizer(const GroupRep& rep, const PureState& p) {
    std::vector<std::size_t> out;
    for (std::size_t g = 0; g < rep.order(); ++g) {
        if (same_state(conjugate(rep[g], p), p)) out.push_back(g);
    }
    return out;
}

SchurSum schur_sum(const Orbit& orb, Tolerance tol) {
    const StateSet& members = orb.members;
    ComplexMatrix sum(members.dim(), members.dim());
    for (const auto& m : members.states()) sum += m.projector();
    const auto vectors = members.vectors();
    SchurSum out;
    out.projector_r = span_projector(vectors, tol);
    const double rank = trace(out.projector_r).real();
    out.rank_r = static_cast<std::size_t>(std::lround(rank));
    out.c = static_cast<double>(members.size()) / rank;
    const double mismatch = frobenius_distance(sum, out.c * out.projector_r);
    if (mismatch > kSchurSlack) {
        throw Error(ErrorKind::NotScalarOnSupport,
                    "orbit sum differs from c*R by " + std::to_string(mismatch) +
                        "; the action on the orbit span is not irreducible",
                    mismatch);
    }
    return out;
}

Povm covariant_povm(const Orbit& orb, const SchurSum& sum, Tolerance tol) {
    const std::vector<double> weights(orb.members.size(), 1.0 / sum.c);
    SumConditionResult condition = check_sum_condition(orb.members, weights, tol);
    if (!condition.satisfied) {
        throw Error(ErrorKind::NotScalarOnSupport, "equal weights 1/c do not reproduce the span projector");
    }
    return build_povm(orb.members, condition, tol);
}

std::vector<ComplexMatrix> covariant_effects_per_element(const GroupRep& rep, const PureState& p, Tolerance tol) {
    const Orbit orb = orbit(rep, p, tol);
    const SchurSum sum = schur_sum(orb, tol);
    const std::size_t d = rep.dim();
    if (sum.rank_r != d) {
        throw Error(ErrorKind::NotScalarOnSupport, "per-element covariant effects need an irreducible action");
    }
    const double scale = static_cast<double>(d) / (static_cast<double>(rep.order()) * static_cast<double>(d - 1));
    const ComplexMatrix perp = ComplexMatrix::identity(d) - p.projector();
    std::vector<ComplexMatrix> effects;
    effects.reserve(rep.order());
    for (const auto& u : rep.elements()) effects.push_back(scale * (u * perp * adjoint(u)));
    return effects;
}

GroupRep builtin_quaternion() {
    const auto& s = pauli_matrices();
    const Complex i(0.0, 1.0);
    const ComplexMatrix id = ComplexMatrix::identity(2);
    std::vector<ComplexMatrix> elements{
        id, -id, i * s[0], -i * s[0], -i * s[1], i * s[1], i * s[2], -i * s[2],
    };
    return GroupRep(std::move(elements), {"1", "-1", "i", "-i", "j", "-j", "k", "-k"});
}

GroupRep builtin_symmetric_permutation(int n) {
    if (n < 3) throw Error(ErrorKind::InvalidArgument, "symmetric group needs n >= 3");
    if (n > 6) throw Error(ErrorKind::TooLarge, "symmetric group S_" + std::to_string(n) + " is too large");
    const auto size = static_cast<std::size_t>(n);
    std::vector<std::size_t> perm(size);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::vector<ComplexMatrix> elements;
    std::vector<std::string> labels;
    do {
        ComplexMatrix m(size, size);
        std::string label;
        for (std::size_t j = 0; j < size; ++j) {
            m(perm[j], j) = 1.0;  // e_j -> e_perm[j]
            label += std::to_string(perm[j] + 1);
        }
        elements.push_back(std::move(m));
        labels.push_back(std::move(label));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return GroupRep(std::move(elements), std::move(labels));
}

GroupRep builtin_cyclic_shift(int n) {
    if (n < 2) throw Error(ErrorKind::InvalidArgument, "cyclic group needs n >= 2");
    if (n > 64) throw Error(ErrorKind::TooLarge, "cyclic group is too large");
    const auto size = static_cast<std::size_t>(n);
    std::vector<ComplexMatrix> elements;
    std::vector<std::string> labels;
    for (std::size_t s = 0; s < size; ++s) {
        ComplexMatrix m(size, size);
        for (std::size_t j = 0; j < size; ++j) m((j + s) % size, j) = 1.0;
        elements.push_back(std::move(m));
        labels.push_back("shift" + std::to_string(s));
    }
    return GroupRep(std::move(elements), std::move(labels));
}

std::vector<CVector> standard_subspace_vectors(int n) {
    if (n < 2) throw Error(ErrorKind::InvalidArgument, "standard subspace needs n >= 2");
    const auto size = static_cast<std::size_t>(n);
    std::vector<CVector> out;
    for (std::size_t k = 1; k < size; ++k) {
        const double scale = 1.0 / std::sqrt(static_cast<double>(k * (k + 1)));
        CVector v(size, 0.0);
        for (std::size_t j = 0; j < k; ++j) v[j] = scale;
        v[k] = -static_cast<double>(k) * scale;
        out.push_back(std::move(v));
    }
    return out;
}

PureState tetrahedral_state() { return state_from_bloch({1.0, 1.0, 1.0}); }

}  // namespace antidist
