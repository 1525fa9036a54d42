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

#include "antidist/exclusion.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace antidist {

namespace {

constexpr double kSumConditionSlack = 1e-8;

double overlap(const ComplexMatrix& a, const ComplexMatrix& b) {
    // tr(AB) for Hermitian A, B without forming the product.
    double acc = 0.0;
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) acc += (a(r, c) * b(c, r)).real();
    }
    return acc;
}

std::vector<ComplexMatrix> operators_of(const StateSet& set) {
    std::vector<ComplexMatrix> out;
    out.reserve(set.size());
    for (const auto& p : set.states()) out.push_back(p.projector());
    return out;
}

std::vector<ComplexMatrix> operators_of(const MixedStateSet& set) {
    std::vector<ComplexMatrix> out;
    out.reserve(set.size());
    for (const auto& rho : set.states()) out.push_back(rho.matrix());
    return out;
}

ComplexMatrix matrix_sqrt_psd(const ComplexMatrix& a, Tolerance tol) {
    const auto eig = hermitian_eigen(a, tol);
    const std::size_t n = a.rows();
    ComplexMatrix out(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        const double root = std::sqrt(std::max(0.0, eig.values[k]));
        if (root == 0.0) continue;
        out += root * ComplexMatrix::outer(eig.vectors.column(k));
    }
    return out;
}

bool looks_pure(const ComplexMatrix& rho) { return std::abs(overlap(rho, rho) - 1.0) <= 1e-9; }

FidelityBound fidelity_bound(std::span<const ComplexMatrix> states, Tolerance tol) {
    const std::size_t n = states.size();
    if (n < 1) throw Error(ErrorKind::EmptyInput, "fidelity bound needs at least one state");
    FidelityBound out;
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
            if (j != k) out.lhs += fidelity(states[j], states[k], tol);
        }
    }
    const double nn = static_cast<double>(n);
    out.rhs = nn * (nn - 2.0);
    out.violated = out.lhs > out.rhs + tol.eps;
    return out;
}

}  // namespace

bool is_distinguishable(const StateSet& set, Tolerance tol) {
    for (std::size_t j = 0; j < set.size(); ++j) {
        for (std::size_t k = j + 1; k < set.size(); ++k) {
            if (std::norm(inner(set[j].vector(), set[k].vector())) > tol.eps) return false;
        }
    }
    return true;
}

Povm swap_povm(const StateSet& set, Tolerance tol) {
    const std::size_t n = set.size();
    if (n < 2) throw Error(ErrorKind::InvalidArgument, "swap measurement needs at least two states");
    if (!is_distinguishable(set, tol)) {
        throw Error(ErrorKind::InvalidArgument, "swap measurement needs pairwise orthogonal states");
    }
    ComplexMatrix remainder = ComplexMatrix::identity(set.dim());
    for (const auto& p : set.states()) remainder -= p.projector();
    remainder *= Complex(1.0 / static_cast<double>(n));

    std::vector<ComplexMatrix> effects;
    effects.reserve(n);
    for (std::size_t j = 0; j < n; ++j) effects.push_back(set[(j + 1) % n].projector() + remainder);
    return validate_povm(std::move(effects), tol);
}

bool verify_antidistinguishing(std::span<const ComplexMatrix> states, const Povm& m, Tolerance tol) {
    if (states.size() != m.size()) {
        throw Error(ErrorKind::CountMismatch, std::to_string(states.size()) + " states but " +
                                                  std::to_string(m.size()) + " effects");
    }
    for (const auto& rho : states) {
        if (rho.rows() != m.dim() || rho.cols() != m.dim()) {
            throw Error(ErrorKind::DimensionMismatch, "state and POVM dimensions differ");
        }
    }
    for (std::size_t j = 0; j < m.size(); ++j) {
        if (overlap(states[j], m[j]) > tol.eps) return false;
        double total = 0.0;
        for (const auto& rho : states) total += overlap(rho, m[j]);
        if (!(total > tol.eps)) return false;
    }
    return true;
}

bool verify_antidistinguishing(const StateSet& set, const Povm& m, Tolerance tol) {
    const auto ops = operators_of(set);
    return verify_antidistinguishing(std::span<const ComplexMatrix>(ops), m, tol);
}

bool verify_antidistinguishing(const MixedStateSet& set, const Povm& m, Tolerance tol) {
    const auto ops = operators_of(set);
    return verify_antidistinguishing(std::span<const ComplexMatrix>(ops), m, tol);
}

RealMatrix gram_overlaps(const StateSet& set) {
    const std::size_t n = set.size();
    RealMatrix p(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        p(j, j) = 1.0;
        for (std::size_t k = j + 1; k < n; ++k) {
            const double v = std::norm(inner(set[j].vector(), set[k].vector()));
            p(j, k) = v;
            p(k, j) = v;
        }
    }
    return p;
}

std::vector<double> solve_weights(const StateSet& set) {
    if (set.empty()) throw Error(ErrorKind::EmptyInput, "no states");
    const std::vector<double> ones(set.size(), 1.0);
    return solve_linear(gram_overlaps(set), ones);
}

SumConditionResult check_sum_condition(const StateSet& set, std::span<const double> weights, Tolerance tol) {
    if (weights.size() != set.size()) {
        throw Error(ErrorKind::CountMismatch, "weight count differs from state count");
    }
    if (set.empty()) throw Error(ErrorKind::EmptyInput, "no states");

    SumConditionResult out;
    out.weights.assign(weights.begin(), weights.end());
    const auto vectors = set.vectors();
    out.projector_r = span_projector(vectors, tol);
    out.rank_r = static_cast<std::size_t>(std::lround(trace(out.projector_r).real()));

    ComplexMatrix sum(set.dim(), set.dim());
    for (std::size_t j = 0; j < set.size(); ++j) sum += weights[j] * set[j].projector();
    out.residual = frobenius_distance(sum, out.projector_r);

    const bool positive = std::all_of(weights.begin(), weights.end(), [&](double t) { return t > tol.eps; });
    out.satisfied = positive && out.residual <= kSumConditionSlack;
    return out;
}

Povm build_povm(const StateSet& set, const SumConditionResult& result, Tolerance tol) {
    if (!result.satisfied) {
        throw Error(ErrorKind::InvalidArgument, "build_povm needs a satisfied sum condition");
    }
    if (result.weights.size() != set.size()) {
        throw Error(ErrorKind::CountMismatch, "weight count differs from state count");
    }
    if (result.rank_r < 2) {
        throw Error(ErrorKind::RankTooSmall, "span projector has rank " + std::to_string(result.rank_r));
    }
    const std::size_t n = set.size();
    const double r = static_cast<double>(result.rank_r);
    const ComplexMatrix& proj = result.projector_r;
    const ComplexMatrix complement =
        (ComplexMatrix::identity(set.dim()) - proj) * (1.0 / static_cast<double>(n));

    std::vector<ComplexMatrix> effects;
    effects.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        effects.push_back((result.weights[j] / (r - 1.0)) * (proj - set[j].projector()) + complement);
    }
    return validate_povm(std::move(effects), tol);
}

double fidelity(const ComplexMatrix& rho, const ComplexMatrix& sigma, Tolerance tol) {
    if (rho.rows() != sigma.rows() || !rho.is_square() || !sigma.is_square()) {
        throw Error(ErrorKind::DimensionMismatch, "fidelity of operators with different shapes");
    }
    if (looks_pure(rho) || looks_pure(sigma)) return std::max(0.0, overlap(rho, sigma));
    const ComplexMatrix root = matrix_sqrt_psd(rho, tol);
    ComplexMatrix inner_op = root * sigma * root;
    inner_op = (inner_op + adjoint(inner_op)) * 0.5;
    const auto eig = hermitian_eigen(inner_op, tol);
    double acc = 0.0;
    for (double v : eig.values) acc += std::sqrt(std::max(0.0, v));
    return acc * acc;
}

FidelityBound fidelity_bound_check(const StateSet& set, Tolerance tol) {
    const auto ops = operators_of(set);
    return fidelity_bound(ops, tol);
}

FidelityBound fidelity_bound_check(const MixedStateSet& set, Tolerance tol) {
    const auto ops = operators_of(set);
    return fidelity_bound(ops, tol);
}

std::pair<MixedStateSet, Povm> union_povm(const MixedStateSet& a, const Povm& ma, const MixedStateSet& b,
                                          const Povm& mb, Tolerance tol) {
    if (a.dim() != b.dim()) throw Error(ErrorKind::DimensionMismatch, "union of sets in different dimensions");
    for (std::size_t j = 0; j < b.size(); ++j) {
        if (a.find(b[j])) {
            throw Error(ErrorKind::OverlappingSets, "state " + std::to_string(j) + " of the second set is shared", j);
        }
    }
    if (!verify_antidistinguishing(a, ma, tol) || !verify_antidistinguishing(b, mb, tol)) {
        throw Error(ErrorKind::InvalidArgument, "union inputs must come with antidistinguishing measurements");
    }

    std::vector<DensityMatrix> states = a.states();
    states.insert(states.end(), b.states().begin(), b.states().end());
    std::vector<ComplexMatrix> effects;
    effects.reserve(ma.size() + mb.size());
    for (const auto& e : ma.effects()) effects.push_back(0.5 * e);
    for (const auto& e : mb.effects()) effects.push_back(0.5 * e);
    return {MixedStateSet(std::move(states)), validate_povm(std::move(effects), tol)};
}

std::pair<StateSet, Povm> union_povm(const StateSet& a, const Povm& ma, const StateSet& b, const Povm& mb,
                                     Tolerance tol) {
    for (std::size_t j = 0; j < b.size(); ++j) {
        if (a.find(b[j])) {
            throw Error(ErrorKind::OverlappingSets, "state " + std::to_string(j) + " of the second set is shared", j);
        }
    }
    auto [mixed, povm] = union_povm(MixedStateSet::from_pure(a), ma, MixedStateSet::from_pure(b), mb, tol);
    std::vector<PureState> states = a.states();
    states.insert(states.end(), b.states().begin(), b.states().end());
    return {StateSet(std::move(states)), std::move(povm)};
}

std::pair<MixedStateSet, Povm> two_n_construction(const StateSet& set, TwoNScaling scaling, Tolerance tol) {
    if (set.empty()) throw Error(ErrorKind::EmptyInput, "two_n_construction needs at least one state");
    const std::size_t d = set.dim();
    if (d < 2) throw Error(ErrorKind::DimensionOne, "no antidistinguishable pairs exist in dimension 1");

    const ComplexMatrix id = ComplexMatrix::identity(d);
    struct Pair {
        DensityMatrix pure;
        DensityMatrix complement;
        ComplexMatrix excluding_pure;        // 1 - P_i
        ComplexMatrix excluding_complement;  // P_i
    };
    std::vector<Pair> pairs;
    std::vector<DensityMatrix> seen;
    auto already_seen = [&](const DensityMatrix& rho) {
        return std::any_of(seen.begin(), seen.end(), [&](const DensityMatrix& s) {
            return frobenius_distance(s.matrix(), rho.matrix()) <= kSameStateDistance;
        });
    };
    for (const auto& p : set.states()) {
        auto pure = DensityMatrix::from_pure(p);
        auto complement =
            DensityMatrix::from_matrix((id - p.projector()) * (1.0 / static_cast<double>(d - 1)), tol);
        // In d = 2 the complement of P_i can be another P_k; then the pair
        // {P_k, P_i} is already present.
        if (already_seen(pure) || already_seen(complement)) continue;
        seen.push_back(pure);
        seen.push_back(complement);
        pairs.push_back({std::move(pure), std::move(complement), id - p.projector(), p.projector()});
    }

    if (scaling == TwoNScaling::Balanced) {
        const double scale = 1.0 / static_cast<double>(pairs.size());
        std::vector<DensityMatrix> states;
        std::vector<ComplexMatrix> effects;
        for (const auto& pr : pairs) {
            states.push_back(pr.pure);
            states.push_back(pr.complement);
            effects.push_back(scale * pr.excluding_pure);
            effects.push_back(scale * pr.excluding_complement);
        }
        return {MixedStateSet(std::move(states)), validate_povm(std::move(effects), tol)};
    }

    auto pair_set = [](const Pair& pr) { return MixedStateSet({pr.pure, pr.complement}); };
    auto pair_povm = [&](const Pair& pr) {
        return validate_povm({pr.excluding_pure, pr.excluding_complement}, tol);
    };
    MixedStateSet acc_set = pair_set(pairs.front());
    Povm acc_povm = pair_povm(pairs.front());
    for (std::size_t i = 1; i < pairs.size(); ++i) {
        auto [s, m] = union_povm(acc_set, acc_povm, pair_set(pairs[i]), pair_povm(pairs[i]), tol);
        acc_set = std::move(s);
        acc_povm = std::move(m);
    }
    return {std::move(acc_set), std::move(acc_povm)};
}

}  // namespace antidist
