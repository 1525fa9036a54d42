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

#include "antidist/pipeline.hpp"

#include <string>

#include "antidist/exclusion.hpp"
#include "antidist/qubit.hpp"

namespace antidist {

namespace {

std::optional<Certificate> try_sum_condition(const StateSet& set, Tolerance tol, std::string& notes) {
    std::vector<double> weights;
    try {
        weights = solve_weights(set);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::SingularSystem) throw;
        notes += "overlap system is singular; ";
        return std::nullopt;
    }
    SumConditionResult result = check_sum_condition(set, weights, tol);
    if (!result.satisfied || result.rank_r < 2) {
        notes += "projector-sum condition fails; ";
        return std::nullopt;
    }
    Povm m = build_povm(set, result, tol);
    if (!verify_antidistinguishing(set, m, tol)) return std::nullopt;
    Certificate cert = Certificate::yes(Method::SumProjection, std::move(m));
    cert.weights = std::move(result.weights);
    cert.projector_r = std::move(result.projector_r);
    return cert;
}

}  // namespace

Certificate check_states(const StateSet& set, const CheckOptions& options) {
    if (set.empty()) throw Error(ErrorKind::EmptyInput, "no states to check");
    const Tolerance tol = options.tol;

    if (set.size() >= 2 && is_distinguishable(set, tol)) {
        Povm m = swap_povm(set, tol);
        if (verify_antidistinguishing(set, m, tol)) {
            return Certificate::yes(Method::PairwiseOrthogonal, std::move(m), "states are pairwise orthogonal");
        }
    }

    if (set.dim() == 2) return qubit_certificate(set, qubit_decide(set), tol);

    const FidelityBound bound = fidelity_bound_check(set, tol);
    if (bound.violated) {
        Certificate cert = Certificate::no(Method::FidelityViolation, "pairwise fidelities exceed n(n-2)");
        cert.fidelity = FidelityEvidence{bound.lhs, bound.rhs};
        return cert;
    }

    std::string notes;
    if (auto cert = try_sum_condition(set, tol, notes)) return *cert;

    ChartSearchOptions search;
    search.budget = options.budget;
    search.seed = options.seed;
    search.tol = tol;
    if (options.seed_chart) search.seed_chart = chart_from_evidence(set, *options.seed_chart);
    const ChartSearchResult found = search_chart(set, search);
    if (found.chart) {
        Povm m = povm_from_chart(*found.chart, tol);
        if (verify_antidistinguishing(set, m, tol)) {
            Certificate cert = Certificate::yes(Method::Chart, std::move(m));
            cert.chart = to_evidence(*found.chart);
            return cert;
        }
    }
    notes += "no chart found in " + std::to_string(found.trials) + " trials";
    return Certificate::unknown(std::move(notes));
}

bool certificate_holds(const Certificate& cert, const StateSet& set, Tolerance tol) {
    switch (cert.verdict) {
        case Verdict::AntidistYes:
            return cert.povm && cert.povm->size() == set.size() && cert.povm->dim() == set.dim() &&
                   verify_antidistinguishing(set, *cert.povm, tol);
        case Verdict::AntidistNo:
            if (cert.method == Method::QubitBloch) return set.dim() == 2 && !qubit_decide(set).feasible;
            if (cert.method == Method::FidelityViolation) return fidelity_bound_check(set, tol).violated;
            return false;
        case Verdict::Unknown:
            return true;
    }
    return false;
}

int exit_code(Verdict v) {
    switch (v) {
        case Verdict::AntidistYes:
            return 0;
        case Verdict::AntidistNo:
            return 1;
        case Verdict::Unknown:
            return 3;
    }
    return 2;
}

}  // namespace antidist
