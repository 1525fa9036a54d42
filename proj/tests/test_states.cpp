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

#include "antidist/error.hpp"
#include "antidist/states.hpp"
#include "support.hpp"

namespace antidist {
namespace {

ErrorKind kind_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error thrown";
    return ErrorKind::InvalidArgument;
}

TEST(PureState, Validation) {
    EXPECT_EQ(kind_of([] { PureState::from_vector({}); }), ErrorKind::EmptyInput);
    EXPECT_EQ(kind_of([] { PureState::from_vector({0.0, 0.0}); }), ErrorKind::ZeroVector);
    EXPECT_EQ(kind_of([] { PureState::from_vector({1.0, 1.0}); }), ErrorKind::NormOutOfRange);
    EXPECT_EQ(kind_of([] { PureState::from_vector({std::nan(""), 0.0}); }), ErrorKind::NonFinite);
    const PureState p = PureState::from_vector({1.0 + 5e-7, 0.0});
    EXPECT_DOUBLE_EQ(norm(p.vector()), 1.0);
}

TEST(PureState, GlobalPhaseIsTheSameState) {
    const double s = 1.0 / std::sqrt(2.0);
    const PureState a = PureState::from_vector({s, s});
    const PureState b = PureState::from_vector({Complex(0, s), Complex(0, s)});
    EXPECT_TRUE(same_state(a, b));
    EXPECT_FALSE(same_state(a, PureState::from_vector({s, -s})));
}

TEST(StateSet, RejectsDuplicatesAndMixedDimensions) {
    EXPECT_EQ(kind_of([] { StateSet::from_vectors({{1.0, 0.0}, {-1.0, 0.0}}); }), ErrorKind::DuplicateState);
    EXPECT_EQ(kind_of([] { StateSet::from_vectors({{1.0, 0.0}, {1.0, 0.0, 0.0}}); }), ErrorKind::DimensionMismatch);
    const StateSet set = testing::overlap_triple();
    EXPECT_EQ(set.size(), 3u);
    EXPECT_EQ(set.dim(), 3u);
    EXPECT_EQ(set.find(PureState::from_vector({-1.0, 0.0, 0.0})), std::optional<std::size_t>(0));
}

TEST(DensityMatrix, Validation) {
    EXPECT_EQ(kind_of([] { DensityMatrix::from_matrix(ComplexMatrix{{1.0, 1.0}, {0.0, 0.0}}); }),
              ErrorKind::InvalidState);
    EXPECT_EQ(kind_of([] { DensityMatrix::from_matrix(ComplexMatrix{{2.0, 0.0}, {0.0, -1.0}}); }),
              ErrorKind::InvalidState);
    EXPECT_EQ(kind_of([] { DensityMatrix::from_matrix(ComplexMatrix{{0.5, 0.0}, {0.0, 0.0}}); }),
              ErrorKind::InvalidState);
    const DensityMatrix mixed = DensityMatrix::from_matrix(ComplexMatrix{{0.5, 0.0}, {0.0, 0.5}});
    EXPECT_FALSE(mixed.is_pure());
    EXPECT_TRUE(DensityMatrix::from_pure(PureState::from_vector({0.0, 1.0})).is_pure());
}

TEST(Povm, Validation) {
    const ComplexMatrix half = 0.5 * ComplexMatrix::identity(2);
    EXPECT_NO_THROW(validate_povm({half, half}));
    EXPECT_EQ(kind_of([&] { validate_povm({half}); }), ErrorKind::NotNormalized);
    EXPECT_EQ(kind_of([] { validate_povm({}); }), ErrorKind::EmptyInput);
    const ComplexMatrix bad{{1.5, 0.0}, {0.0, 1.0}};
    const ComplexMatrix neg{{-0.5, 0.0}, {0.0, 0.0}};
    try {
        validate_povm({bad, neg});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotPsd);
        EXPECT_EQ(e.index(), std::optional<std::size_t>(1));
    }
    EXPECT_EQ(kind_of([&] { validate_povm({half, 0.5 * ComplexMatrix::identity(3)}); }),
              ErrorKind::DimensionMismatch);
}

TEST(Certificate, NoOnlyFromExactPathways) {
    EXPECT_NO_THROW(Certificate::no(Method::QubitBloch));
    EXPECT_NO_THROW(Certificate::no(Method::FidelityViolation));
    EXPECT_THROW(Certificate::no(Method::Chart), Error);
    EXPECT_THROW(Certificate::no(Method::SumProjection), Error);
}

TEST(Enums, RoundTripNames) {
    for (Verdict v : {Verdict::AntidistYes, Verdict::AntidistNo, Verdict::Unknown}) {
        EXPECT_EQ(parse_verdict(to_string(v)), v);
    }
    for (Method m : {Method::PairwiseOrthogonal, Method::SumProjection, Method::QubitBloch, Method::Chart,
                     Method::GroupOrbit, Method::FidelityViolation, Method::Union, Method::TwoNConstruction}) {
        EXPECT_EQ(parse_method(to_string(m)), m);
    }
    EXPECT_FALSE(parse_verdict("maybe"));
}

}  // namespace
}  // namespace antidist
