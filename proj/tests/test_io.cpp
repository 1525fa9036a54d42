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

#include <filesystem>

#include "antidist/error.hpp"
#include "antidist/exclusion.hpp"
#include "antidist/io.hpp"
#include "antidist/pipeline.hpp"
#include "support.hpp"

namespace antidist {
namespace {

TEST(Round12, SignificantDigits) {
    EXPECT_EQ(format12(1.0 / 3.0), "0.333333333333");
    EXPECT_EQ(format12(2.0 / 3.0), "0.666666666667");
    EXPECT_EQ(format12(-1e-17), "0");
    EXPECT_DOUBLE_EQ(round12(0.75), 0.75);
    EXPECT_DOUBLE_EQ(round12(round12(std::sqrt(2.0))), round12(std::sqrt(2.0)));
}

TEST(Json, ComplexEntries) {
    EXPECT_EQ(complex_from_json(Json::parse("[1.5, -2]")), Complex(1.5, -2.0));
    EXPECT_EQ(complex_from_json(Json::parse("0.25")), Complex(0.25, 0.0));
    EXPECT_THROW(complex_from_json(Json::parse("[1, 2, 3]")), Error);
    EXPECT_THROW(complex_from_json(Json::parse("\"x\"")), Error);
}

TEST(StateSetFile, ParseAndWrite) {
    const Json doc = Json::parse(R"({"dim": 2, "states": [[[1, 0], [0, 0]], [[0, 0], [0, 1]]], "labels": ["up", "down"]})");
    const StateSetFile f = state_set_file_from_json(doc);
    EXPECT_EQ(f.labels, (std::vector<std::string>{"up", "down"}));
    const StateSet set = to_state_set(f);
    EXPECT_EQ(set.size(), 2u);
    EXPECT_EQ(dump(to_json(f)), dump(to_json(state_set_file_from_json(to_json(f)))));
}

TEST(StateSetFile, Errors) {
    auto kind = [](const char* text) {
        try {
            to_state_set(state_set_file_from_json(Json::parse(text)));
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::InvalidArgument;
    };
    EXPECT_EQ(kind(R"({"states": [[[1, 0]]]})"), ErrorKind::ParseError);
    EXPECT_EQ(kind(R"({"dim": 2, "states": []})"), ErrorKind::ParseError);
    EXPECT_EQ(kind(R"({"dim": 2, "states": [[[1, 0]]]})"), ErrorKind::ParseError);
    EXPECT_EQ(kind(R"({"dim": 2, "states": [[[1, 0], [1, 0]]]})"), ErrorKind::ParseError);
    EXPECT_EQ(kind(R"({"dim": 2, "states": [[[1, 0], [0, 0]]], "labels": ["a", "b"]})"), ErrorKind::ParseError);
}

TEST(Certificate, RoundTripIsByteIdentical) {
    const StateSet set = testing::overlap_triple();
    const Certificate cert = check_states(set);
    const std::string first = dump(to_json(cert));
    const Certificate back = certificate_from_json(Json::parse(first));
    EXPECT_EQ(dump(to_json(back)), first);
    EXPECT_TRUE(certificate_holds(back, set));
}

TEST(Certificate, ChartCertificateRoundTrip) {
    CheckOptions options;
    options.budget = 5;
    const StateSet set = testing::chart_only_triple();
    const Certificate cert = check_states(set, options);
    ASSERT_EQ(cert.method, Method::Chart);
    const std::string first = dump(to_json(cert));
    const Certificate back = certificate_from_json(Json::parse(first));
    EXPECT_EQ(dump(to_json(back)), first);
    EXPECT_TRUE(certificate_holds(back, set));
    EXPECT_TRUE(verify_chart(chart_from_evidence(set, *back.chart)));
}

TEST(Certificate, LoadRejectsInconsistentVerdicts) {
    EXPECT_THROW(certificate_from_json(Json::parse(R"({"verdict": "AntidistYes", "method": "Chart"})")), Error);
    EXPECT_THROW(certificate_from_json(Json::parse(R"({"verdict": "AntidistNo", "method": "Chart"})")), Error);
    EXPECT_THROW(certificate_from_json(Json::parse(R"({"verdict": "Perhaps"})")), Error);
    EXPECT_NO_THROW(certificate_from_json(Json::parse(R"({"verdict": "Unknown", "method": null})")));
}

TEST(Povm, FileRoundTrip) {
    const StateSet set = testing::overlap_triple();
    const Povm m = build_povm(set, check_sum_condition(set, solve_weights(set)));
    const Povm back = povm_from_json(to_json(m));
    EXPECT_TRUE(verify_antidistinguishing(set, back));
    EXPECT_THROW(povm_from_json(Json::parse(R"({"dim": 2, "effects": [[[[1, 0], [0, 0]], [[0, 0], [0.5, 0]]]]})")),
                 Error);
}

TEST(GroupFile, RoundTrip) {
    const GroupRep q = builtin_quaternion();
    const GroupRep back = group_from_json(to_json(q));
    EXPECT_EQ(back.order(), 8u);
    EXPECT_EQ(back.labels(), q.labels());
}

TEST(Files, MissingFileIsParseError) {
    try {
        read_json_file("/nonexistent/antidist.json");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::ParseError);
    }
}

TEST(Dump, InlinesShortArrays) {
    const std::string text = dump(Json::parse(R"({"a": [1, 2], "b": "x,y"})"));
    EXPECT_EQ(text, "{\"a\": [1, 2], \"b\": \"x,y\"}\n");
}

}  // namespace
}  // namespace antidist
