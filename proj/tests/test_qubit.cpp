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

#include <gtest/gtest.h>

#include <random>

#include "antidist/error.hpp"
#include "antidist/exclusion.hpp"
#include "antidist/qubit.hpp"
#include "support.hpp"

namespace antidist {
namespace {

TEST(Bloch, RoundTrip) {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 100; ++trial) {
        const PureState p = testing::random_state(2, rng);
        const BlochVector r = bloch_from_state(p);
        EXPECT_NEAR(r.norm(), 1.0, 1e-12);
        EXPECT_TRUE(same_state(state_from_bloch(r), p));
    }
    const BlochVector south = bloch_from_state(state_from_bloch({0.0, 0.0, -1.0}));
    EXPECT_NEAR(south.z, -1.0, 1e-15);
    EXPECT_NEAR(bloch_from_state(PureState::from_vector({1.0, 0.0})).z, 1.0, 1e-15);
}

TEST(Bloch, WrongDimension) {
    EXPECT_THROW(bloch_from_state(PureState::from_vector({1.0, 0.0, 0.0})), Error);
    EXPECT_THROW(state_from_bloch({0.0, 0.0, 0.0}), Error);
}

TEST(QubitDecide, TrineIsFeasible) {
    const double s = std::sqrt(3.0) / 2.0;
    std::vector<PureState> states{state_from_bloch({1.0, 0.0, 0.0}), state_from_bloch({-0.5, s, 0.0}),
                                  state_from_bloch({-0.5, -s, 0.0})};
    const StateSet set(std::move(states));
    const QubitVerdict v = qubit_decide(set);
    ASSERT_TRUE(v.feasible);
    for (double t : *v.weights) EXPECT_NEAR(t, 2.0 / 3.0, 1e-9);
    EXPECT_TRUE(verify_antidistinguishing(set, qubit_povm(set, *v.weights)));
}

TEST(QubitDecide, NonOrthogonalPairIsInfeasible) {
    const StateSet set = StateSet::from_vectors({{1.0, 0.0}, {0.6, 0.8}});
    const QubitVerdict v = qubit_decide(set);
    EXPECT_FALSE(v.feasible);
    const Certificate cert = qubit_certificate(set, v);
    EXPECT_EQ(cert.verdict, Verdict::AntidistNo);
    EXPECT_EQ(cert.method, Method::QubitBloch);
}

TEST(QubitDecide, MixedInputRejected) {
    const MixedStateSet mixed(std::vector<DensityMatrix>{
        DensityMatrix::from_matrix(0.5 * ComplexMatrix::identity(2)),
        DensityMatrix::from_pure(PureState::from_vector({1.0, 0.0}))});
    try {
        qubit_decide(mixed);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::MixedStateInput);
    }
}

TEST(QubitComplete, SingleStateGetsAntipode) {
    const StateSet set = StateSet::from_vectors({{1.0, 0.0}});
    const QubitCompletion c = qubit_complete(set);
    ASSERT_TRUE(c.added);
    EXPECT_NEAR(bloch_from_state(*c.added).z, -1.0, 1e-12);
    EXPECT_TRUE(c.verdict.feasible);
    EXPECT_EQ(c.enlarged.size(), 2u);
}

TEST(QubitComplete, FeasibleSetUnchanged) {
    const double s = std::sqrt(3.0) / 2.0;
    const StateSet set(std::vector<PureState>{state_from_bloch({1.0, 0.0, 0.0}), state_from_bloch({-0.5, s, 0.0}),
                                              state_from_bloch({-0.5, -s, 0.0})});
    const QubitCompletion c = qubit_complete(set);
    EXPECT_FALSE(c.added);
    EXPECT_EQ(c.enlarged.size(), 3u);
}

TEST(QubitComplete, CoplanarSetsBecomeFeasible) {
    // Vectors spread over less than a half circle of the equator.
    for (int spread = 1; spread <= 5; ++spread) {
        std::vector<PureState> states;
        for (int k = 0; k <= spread; ++k) {
            const double angle = 0.5 * k;
            states.push_back(state_from_bloch({std::cos(angle), std::sin(angle), 0.0}));
        }
        const StateSet set(std::move(states));
        ASSERT_FALSE(qubit_decide(set).feasible);
        const QubitCompletion c = qubit_complete(set);
        ASSERT_TRUE(c.added);
        EXPECT_NEAR(bloch_from_state(*c.added).z, 0.0, 1e-12);
        EXPECT_TRUE(qubit_decide(c.enlarged).feasible);
        EXPECT_TRUE(verify_antidistinguishing(c.enlarged, qubit_povm(c.enlarged, *c.verdict.weights)));
    }
}

TEST(QubitComplete, WrongDimension) {
    EXPECT_THROW(qubit_complete(testing::overlap_triple()), Error);
}

}  // namespace
}  // namespace antidist
