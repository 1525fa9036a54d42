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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Random instances come from fixed seeds.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "antidist/chart.hpp"
#include "antidist/exclusion.hpp"
#include "antidist/group.hpp"
#include "antidist/pipeline.hpp"
#include "antidist/qubit.hpp"
#include "support.hpp"

namespace antidist {
namespace {

using testing::real_matrix;

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok && pass) detail = what;
        pass = pass && ok;
    }
};

// Every set certified AntidistYes anywhere in the suite, for criterion 8.
std::vector<StateSet> yes_sets;
std::vector<MixedStateSet> yes_mixed_sets;

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

ComplexMatrix conjugated(const ComplexMatrix& m, const ComplexMatrix& u) { return u * m * adjoint(u); }

ComplexMatrix unitary_matrix(const std::vector<CVector>& columns) {
    const std::size_t d = columns.size();
    ComplexMatrix u(d, d);
    for (std::size_t c = 0; c < d; ++c) {
        for (std::size_t r = 0; r < d; ++r) u(r, c) = columns[c][r];
    }
    return u;
}

StateSet rotated(const StateSet& set, const ComplexMatrix& u) {
    std::vector<CVector> vs;
    for (const auto& p : set.states()) vs.push_back(mat_vec(u, p.vector()));
    return StateSet::from_vectors(std::move(vs));
}

// Embeds a set into C^d by zero padding.
StateSet padded(const StateSet& set, std::size_t d) {
    std::vector<CVector> vs;
    for (auto v : set.vectors()) {
        v.resize(d, 0.0);
        vs.push_back(std::move(v));
    }
    return StateSet::from_vectors(std::move(vs));
}

Outcome criterion1() {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    const StateSet set = testing::overlap_triple();
    const auto t = solve_weights(set);
    o.require(std::abs(t[0] - 0.75) <= 1e-10 && std::abs(t[1] - 0.625) <= 1e-10 && std::abs(t[2] - 0.625) <= 1e-10,
              "weights differ from (3/4, 5/8, 5/8)");
    const SumConditionResult res = check_sum_condition(set, t);
    o.require(res.satisfied, "sum condition not satisfied");
    o.require(max_abs_difference(res.projector_r, real_matrix({{1, 0, 0}, {0, 1, 0}, {0, 0, 0}})) <= 1e-10,
              "span projector differs from diag(1,1,0)");
    const Povm m = build_povm(set, res);
    o.require(max_abs_difference(m[0], real_matrix({{0, 0, 0}, {0, 9, 0}, {0, 0, 4}}, 1.0 / 12.0)) <= 1e-10, "M(1)");
    o.require(max_abs_difference(m[1], real_matrix({{0.5, -0.25, 0}, {-0.25, 0.125, 0}, {0, 0, 1.0 / 3.0}})) <= 1e-10,
              "M(2)");
    o.require(max_abs_difference(m[2], real_matrix({{0.5, 0.25, 0}, {0.25, 0.125, 0}, {0, 0, 1.0 / 3.0}})) <= 1e-10,
              "M(3)");
    o.require(verify_antidistinguishing(set, m), "POVM does not verify");
    yes_sets.push_back(set);
    const double elapsed = seconds_since(start);
    o.require(elapsed < 1.0, "runtime " + std::to_string(elapsed) + " s");
    return o;
}

Outcome criterion2() {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    const StateSet set = testing::chart_only_triple();
    const auto t = solve_weights(set);
    ComplexMatrix sum(3, 3);
    for (std::size_t j = 0; j < 3; ++j) sum += t[j] * set[j].projector();
    o.require(!is_projection(sum), "Gram-system candidate is a projection");
    const Chart chart = testing::reference_chart();
    o.require(verify_chart(chart), "reference chart fails verify_chart");
    o.require(verify_antidistinguishing(set, povm_from_chart(chart)), "chart POVM does not verify");
    yes_sets.push_back(set);
    const double elapsed = seconds_since(start);
    o.require(elapsed < 1.0, "runtime " + std::to_string(elapsed) + " s");
    return o;
}

Outcome criterion3() {
    Outcome o;
    const GroupRep q = builtin_quaternion();
    const Orbit orb = orbit(q, tetrahedral_state());
    o.require(orb.members.size() == 4, "orbit size " + std::to_string(orb.members.size()));
    o.require(orb.stabilizer_order == 2, "stabilizer order " + std::to_string(orb.stabilizer_order));
    ComplexMatrix sum(2, 2);
    for (const auto& p : orb.members.states()) sum += p.projector();
    o.require(max_abs_difference(sum, 2.0 * ComplexMatrix::identity(2)) <= 1e-10, "projector sum is not 2*1");
    const Povm m = covariant_povm(orb, schur_sum(orb));
    o.require(verify_antidistinguishing(orb.members, m), "covariant POVM does not verify");
    const QubitVerdict v = qubit_decide(orb.members);
    o.require(v.feasible, "qubit_decide infeasible");
    if (v.weights) {
        for (double w : *v.weights) o.require(std::abs(w - 0.5) <= 1e-10, "qubit weight " + std::to_string(w));
    }
    yes_sets.push_back(orb.members);
    return o;
}

Outcome criterion4() {
    Outcome o;
    const GroupRep s3 = builtin_symmetric_permutation(3);
    const Orbit orb = orbit(s3, PureState::from_vector(standard_subspace_vectors(3).front()));
    o.require(orb.members.size() == 3, "orbit size " + std::to_string(orb.members.size()));
    const std::vector<CVector> zero_sum{{1.0, -1.0, 0.0}, {1.0, 1.0, -2.0}};
    const ComplexMatrix r = span_projector(zero_sum);
    o.require(std::abs(trace(r).real() - 2.0) <= 1e-12, "R is not rank 2");
    ComplexMatrix sum(3, 3);
    for (const auto& p : orb.members.states()) sum += p.projector();
    o.require(max_abs_difference(sum, 1.5 * r) <= 1e-10, "sum differs from (3/2) R");
    const Certificate cert = check_states(orb.members);
    o.require(cert.verdict == Verdict::AntidistYes && cert.method == Method::SumProjection,
              "pipeline did not certify through the projector-sum condition");
    if (cert.weights) {
        for (double w : *cert.weights) o.require(std::abs(w - 2.0 / 3.0) <= 1e-10, "weight " + std::to_string(w));
    }
    o.require(certificate_holds(cert, orb.members), "certificate does not hold");
    yes_sets.push_back(orb.members);
    return o;
}

// Stiemke alternative: positive weights balancing the Bloch vectors exist iff
// no direction w has w.r_j >= 0 for all j with strict inequality somewhere.
// Candidate directions cover the extreme rays of {w : w.r_j >= 0}.
bool separating_direction_exists(const std::vector<BlochVector>& rs) {
    auto cross = [](const BlochVector& a, const BlochVector& b) {
        return BlochVector{a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
    };
    std::vector<BlochVector> candidates;
    for (const auto& a : rs) {
        candidates.push_back(a);
        for (const auto& b : rs) {
            const BlochVector ab = cross(a, b);
            candidates.push_back(ab);
            candidates.push_back(a + b);
            for (const auto& c : rs) candidates.push_back(cross(ab, c));
        }
    }
    for (const auto& w0 : candidates) {
        const double len = w0.norm();
        if (len < 1e-9) continue;
        for (double sign : {1.0, -1.0}) {
            const BlochVector w = w0 * (sign / len);
            bool all_nonneg = true;
            bool some_pos = false;
            for (const auto& r : rs) {
                const double dot = w.dot(r);
                if (dot < -1e-12) all_nonneg = false;
                if (dot > 1e-9) some_pos = true;
            }
            if (all_nonneg && some_pos) return true;
        }
    }
    return false;
}

Outcome criterion5() {
    Outcome o;
    std::mt19937_64 rng(501);
    int feasible = 0;
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t n = 2 + static_cast<std::size_t>(trial % 7);
        const StateSet set = trial % 4 == 3 ? testing::random_capped_qubit_set(n, rng) : testing::random_qubit_set(n, rng);
        std::vector<BlochVector> rs;
        for (const auto& p : set.states()) rs.push_back(bloch_from_state(p));
        const bool oracle = !separating_direction_exists(rs);
        const QubitVerdict v = qubit_decide(set);
        o.require(v.feasible == oracle, "trial " + std::to_string(trial) + ": LP and oracle disagree");
        if (v.feasible) {
            ++feasible;
            const bool ok = v.weights && verify_antidistinguishing(set, qubit_povm(set, *v.weights));
            o.require(ok, "trial " + std::to_string(trial) + ": feasible POVM does not verify");
            if (ok) yes_sets.push_back(set);
        } else {
            const Certificate cert = check_states(set);
            o.require(cert.verdict == Verdict::AntidistNo, "trial " + std::to_string(trial) + ": infeasible set not No");
        }
    }
    o.require(feasible > 50 && feasible < 450, "unbalanced sample: " + std::to_string(feasible) + " feasible");
    return o;
}

Outcome criterion6() {
    Outcome o;
    std::mt19937_64 rng(601);
    int done = 0;
    int trial = 0;
    while (done < 500) {
        const std::size_t n = 1 + static_cast<std::size_t>(trial % 8);
        const StateSet set = trial % 2 == 0 ? testing::random_capped_qubit_set(n, rng) : testing::random_qubit_set(n, rng);
        ++trial;
        if (qubit_decide(set).feasible) continue;
        ++done;
        const QubitCompletion c = qubit_complete(set);
        const std::string tag = "instance " + std::to_string(done);
        o.require(c.added.has_value(), tag + ": nothing added");
        o.require(c.enlarged.size() == set.size() + 1, tag + ": enlarged size");
        if (c.added) o.require(!set.find(*c.added), tag + ": added state duplicates a member");
        const QubitVerdict v = qubit_decide(c.enlarged);
        o.require(v.feasible, tag + ": enlarged set infeasible");
        if (v.feasible && v.weights) {
            const bool ok = verify_antidistinguishing(c.enlarged, qubit_povm(c.enlarged, *v.weights));
            o.require(ok, tag + ": enlarged POVM does not verify");
            if (ok) yes_sets.push_back(c.enlarged);
        }
    }
    return o;
}

Outcome criterion7() {
    Outcome o;
    std::mt19937_64 rng(701);
    std::uniform_int_distribution<std::size_t> dim(2, 5);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t d = dim(rng);
        const auto cols = testing::random_unitary_columns(d, rng);
        const std::size_t n = 2 + static_cast<std::size_t>(trial) % (d - 1);
        const StateSet set = StateSet::from_vectors(std::vector<CVector>(cols.begin(), cols.begin() + static_cast<long>(n)));
        const bool ok = verify_antidistinguishing(set, swap_povm(set));
        o.require(ok, "swap POVM trial " + std::to_string(trial));
        if (ok) yes_sets.push_back(set);
    }
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t d = 3 + static_cast<std::size_t>(trial % 3);
        const ComplexMatrix u = unitary_matrix(testing::random_unitary_columns(d, rng));
        const StateSet b = rotated(padded(testing::overlap_triple(), d), u);
        const Povm mb = build_povm(b, check_sum_condition(b, solve_weights(b)));
        const auto cols = testing::random_unitary_columns(d, rng);
        const StateSet a = StateSet::from_vectors({cols[0], cols[1]});
        const auto [joined, m] = union_povm(a, swap_povm(a), b, mb);
        const bool ok = verify_antidistinguishing(joined, m);
        o.require(ok, "union trial " + std::to_string(trial));
        if (ok) yes_sets.push_back(joined);
    }
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t d = 2 + static_cast<std::size_t>(trial % 3);
        const std::size_t n = 1 + static_cast<std::size_t>(trial % 5);
        const StateSet set = testing::random_set(n, d, rng);
        const auto scaling = trial % 2 == 0 ? TwoNScaling::Balanced : TwoNScaling::Chained;
        const auto [super, m] = two_n_construction(set, scaling);
        o.require(super.size() <= 2 * n, "2n trial " + std::to_string(trial) + ": too many states");
        const bool ok = verify_antidistinguishing(super, m);
        o.require(ok, "2n trial " + std::to_string(trial) + ": does not verify");
        if (ok) yes_mixed_sets.push_back(super);
    }
    return o;
}

Outcome criterion8() {
    Outcome o;
    for (std::size_t k = 0; k < yes_sets.size(); ++k) {
        o.require(!fidelity_bound_check(yes_sets[k]).violated, "pure Yes set " + std::to_string(k) + " violates the bound");
    }
    for (std::size_t k = 0; k < yes_mixed_sets.size(); ++k) {
        o.require(!fidelity_bound_check(yes_mixed_sets[k]).violated,
                  "mixed Yes set " + std::to_string(k) + " violates the bound");
    }
    const std::size_t collected = yes_sets.size() + yes_mixed_sets.size();
    o.require(collected >= 1000, "only " + std::to_string(collected) + " Yes sets collected");

    const StateSet pair = StateSet::from_vectors({{1.0, 0.0, 0.0}, {0.6, 0.8, 0.0}});
    const FidelityBound bound = fidelity_bound_check(pair);
    o.require(bound.violated && bound.rhs == 0.0, "pair bound not violated with rhs 0");
    const Certificate cert = check_states(pair);
    o.require(cert.verdict == Verdict::AntidistNo && cert.method == Method::FidelityViolation,
              "pair not certified No through the fidelity bound");
    return o;
}

Outcome criterion9() {
    Outcome o;
    std::mt19937_64 rng(901);
    for (int trial = 0; trial < 100; ++trial) {
        StateSet set;
        switch (trial % 4) {
            case 0: {
                const std::size_t d = 3 + static_cast<std::size_t>(trial % 3);
                set = rotated(padded(testing::overlap_triple(), d), unitary_matrix(testing::random_unitary_columns(d, rng)));
                break;
            }
            case 1: {
                const int n = 3 + trial % 3;
                const Orbit orb = orbit(builtin_symmetric_permutation(n), PureState::from_vector(standard_subspace_vectors(n).front()));
                const auto d = static_cast<std::size_t>(n);
                set = rotated(orb.members, unitary_matrix(testing::random_unitary_columns(d, rng)));
                break;
            }
            case 2: {
                const Orbit orb = orbit(builtin_quaternion(), tetrahedral_state());
                set = rotated(orb.members, unitary_matrix(testing::random_unitary_columns(2, rng)));
                break;
            }
            default: {
                const auto cols = testing::random_unitary_columns(4, rng);
                set = StateSet::from_vectors({cols[0], cols[1], cols[2]});
                break;
            }
        }
        const std::string tag = "instance " + std::to_string(trial);
        const SumConditionResult res = check_sum_condition(set, solve_weights(set));
        o.require(res.satisfied, tag + ": sum condition fails");
        if (!res.satisfied) continue;
        const Povm m = build_povm(set, res);
        const Chart chart = chart_from_povm(set, m);
        o.require(verify_chart(chart), tag + ": spectral chart fails verify_chart");
        const bool ok = verify_chart(chart) && verify_antidistinguishing(set, povm_from_chart(chart));
        o.require(ok, tag + ": chart POVM does not verify");
        if (ok) yes_sets.push_back(set);

        // Charts found by search on random sets must also verify.
        const StateSet random = testing::random_set(3 + static_cast<std::size_t>(trial % 2), 3, rng);
        ChartSearchOptions options;
        options.budget = 20;
        options.seed = static_cast<std::uint64_t>(trial);
        const auto found = search_chart(random, options);
        if (found.chart) {
            o.require(verify_chart(*found.chart), tag + ": searched chart fails verify_chart");
            o.require(verify_antidistinguishing(random, povm_from_chart(*found.chart)), tag + ": searched chart POVM");
        }
    }
    return o;
}

}  // namespace
}  // namespace antidist

int main() {
    using antidist::Outcome;
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"1 overlapping triple: weights, span projector and POVM", antidist::criterion1},
        {"2 chart-only triple: projector-sum failure and reference chart", antidist::criterion2},
        {"3 quaternion orbit of the tetrahedral state", antidist::criterion3},
        {"4 S3 standard-representation orbit", antidist::criterion4},
        {"5 qubit decision agrees with separating-direction oracle", antidist::criterion5},
        {"6 qubit completion soundness", antidist::criterion6},
        {"7 swap, union and 2n constructions", antidist::criterion7},
        {"8 fidelity bound on every Yes set", antidist::criterion8},
        {"9 chart and POVM round trip", antidist::criterion9},
    };
    // Criterion 8 inspects the Yes sets gathered by all the others, so it runs
    // last; lines are still printed in criterion order.
    const std::vector<std::size_t> order{0, 1, 2, 3, 4, 5, 6, 8, 7};
    std::vector<Outcome> outcomes(criteria.size());
    for (std::size_t k : order) {
        try {
            outcomes[k] = criteria[k].second();
        } catch (const std::exception& e) {
            outcomes[k].pass = false;
            outcomes[k].detail = std::string("exception: ") + e.what();
        }
    }
    int failures = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        const Outcome& o = outcomes[k];
        std::printf("%s criterion %s%s%s\n", o.pass ? "PASS" : "FAIL", criteria[k].first, o.pass ? "" : " -- ",
                    o.pass ? "" : o.detail.c_str());
        if (!o.pass) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
