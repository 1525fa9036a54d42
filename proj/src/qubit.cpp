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

#include "antidist/qubit.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "antidist/exclusion.hpp"
#include "antidist/optimize.hpp"

namespace antidist {

namespace {

void require_qubit(std::size_t dim) {
    if (dim != 2) {
        throw Error(ErrorKind::WrongDimension, "qubit routines need dimension 2, got " + std::to_string(dim));
    }
}

BlochVector bloch_of(const ComplexMatrix& rho) {
    const auto& sigma = pauli_matrices();
    return {trace(rho * sigma[0]).real(), trace(rho * sigma[1]).real(), trace(rho * sigma[2]).real()};
}

}  // namespace

double BlochVector::norm() const { return std::sqrt(x * x + y * y + z * z); }

const std::array<ComplexMatrix, 3>& pauli_matrices() {
    static const std::array<ComplexMatrix, 3> sigma{
        ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}},
        ComplexMatrix{{0.0, Complex(0.0, -1.0)}, {Complex(0.0, 1.0), 0.0}},
        ComplexMatrix{{1.0, 0.0}, {0.0, -1.0}},
    };
    return sigma;
}

BlochVector bloch_from_state(const PureState& p) {
    require_qubit(p.dim());
    return bloch_of(p.projector());
}

BlochVector bloch_from_density(const DensityMatrix& rho) {
    require_qubit(rho.dim());
    return bloch_of(rho.matrix());
}

PureState state_from_bloch(const BlochVector& r) {
    const double len = r.norm();
    if (!(len > 0.0)) throw Error(ErrorKind::ZeroVector, "Bloch vector is zero");
    const double x = r.x / len;
    const double y = r.y / len;
    const double z = r.z / len;
    if (z >= 0.0) {
        const double a = std::sqrt((1.0 + z) / 2.0);
        return PureState::from_vector({a, Complex(x, y) / (2.0 * a)});
    }
    const double c = std::sqrt((1.0 - z) / 2.0);
    return PureState::from_vector({Complex(x, -y) / (2.0 * c), c});
}

QubitVerdict qubit_decide(const StateSet& set) {
    require_qubit(set.dim());
    const std::size_t n = set.size();
    if (n == 0) throw Error(ErrorKind::EmptyInput, "qubit_decide needs at least one state");

    std::vector<BlochVector> r;
    r.reserve(n);
    BlochVector total;
    for (const auto& p : set.states()) {
        r.push_back(bloch_from_state(p));
        total = total + r.back();
    }

    // Variables s_1..s_n, eps with t_j = s_j + eps.
    RealMatrix a(4, n + 1);
    for (std::size_t j = 0; j < n; ++j) {
        a(0, j) = r[j].x;
        a(1, j) = r[j].y;
        a(2, j) = r[j].z;
        a(3, j) = 1.0;
    }
    a(0, n) = total.x;
    a(1, n) = total.y;
    a(2, n) = total.z;
    a(3, n) = static_cast<double>(n);
    const std::vector<double> b{0.0, 0.0, 0.0, 2.0};
    std::vector<double> c(n + 1, 0.0);
    c[n] = 1.0;

    const LpResult lp = maximize_lp(a, b, c);
    QubitVerdict out;
    if (lp.status != LpStatus::Optimal) return out;
    out.margin = lp.x[n];
    if (!(out.margin > kQubitMargin)) return out;

    std::vector<double> t(n);
    for (std::size_t j = 0; j < n; ++j) t[j] = lp.x[j] + lp.x[n];
    out.feasible = true;
    out.weights = std::move(t);
    return out;
}

QubitVerdict qubit_decide(const MixedStateSet& set) {
    require_qubit(set.dim());
    std::vector<PureState> states;
    for (std::size_t j = 0; j < set.size(); ++j) {
        if (!set[j].is_pure()) {
            throw Error(ErrorKind::MixedStateInput, "state " + std::to_string(j) + " is not pure", j);
        }
        states.push_back(state_from_bloch(bloch_from_density(set[j])));
    }
    return qubit_decide(StateSet(std::move(states)));
}

Povm qubit_povm(const StateSet& set, const std::vector<double>& weights, Tolerance tol) {
    require_qubit(set.dim());
    if (weights.size() != set.size()) throw Error(ErrorKind::CountMismatch, "weight count differs from state count");
    const ComplexMatrix id = ComplexMatrix::identity(2);
    std::vector<ComplexMatrix> effects;
    effects.reserve(set.size());
    for (std::size_t j = 0; j < set.size(); ++j) effects.push_back(weights[j] * (id - set[j].projector()));
    try {
        return validate_povm(std::move(effects), tol);
    } catch (const Error& e) {
        throw Error(ErrorKind::InvalidArgument, std::string("weights do not give a measurement: ") + e.what());
    }
}

Certificate qubit_certificate(const StateSet& set, const QubitVerdict& verdict, Tolerance tol) {
    if (!verdict.feasible || !verdict.weights) {
        auto cert = Certificate::no(Method::QubitBloch,
                                    "no strictly positive weights make the Bloch vectors sum to zero");
        return cert;
    }
    auto cert = Certificate::yes(Method::QubitBloch, qubit_povm(set, *verdict.weights, tol),
                                 "positive weights make the Bloch vectors sum to zero");
    cert.bloch_weights = verdict.weights;
    cert.weights = verdict.weights;
    cert.projector_r = ComplexMatrix::identity(2);
    return cert;
}

QubitCompletion qubit_complete(const StateSet& set) {
    require_qubit(set.dim());
    QubitVerdict own = qubit_decide(set);
    if (own.feasible) return {std::nullopt, set, std::move(own)};

    BlochVector total;
    for (const auto& p : set.states()) total = total + bloch_from_state(p);
    const double len = total.norm();
    if (len <= 1e-9) {
        // Unit weights already balance the vectors.
        const double t = 2.0 / static_cast<double>(set.size());
        own.feasible = true;
        own.weights = std::vector<double>(set.size(), t);
        own.margin = t;
        return {std::nullopt, set, std::move(own)};
    }

    PureState added = state_from_bloch(-total);
    if (set.find(added)) {
        throw std::logic_error("completion state coincides with a member of an infeasible set");
    }
    std::vector<PureState> states = set.states();
    states.push_back(added);
    StateSet enlarged(std::move(states));

    QubitVerdict verdict = qubit_decide(enlarged);
    const double scale = 2.0 / (static_cast<double>(set.size()) / len + 1.0);
    std::vector<double> weights(set.size(), scale / len);
    weights.push_back(scale);
    verdict.weights = std::move(weights);
    verdict.added_state = -total * (1.0 / len);
    return {std::move(added), std::move(enlarged), std::move(verdict)};
}

}  // namespace antidist
