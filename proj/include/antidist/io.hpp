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

// JSON file formats. Complex numbers are [re, im] pairs, matrices are
// row-major nested lists, and every number written is rounded to 12
// significant digits.
//
//   state set:   {"dim": d, "states": [[[re, im], ...], ...], "labels": [...]}
//   POVM:        {"dim": d, "effects": [matrix, ...]}
//   group rep:   {"dim": d, "elements": [matrix, ...], "labels": [...]}
//   chart:       {"completions": [[vector, ...], ...], "alphas": [[a, ...], ...]}
//   certificate: {"tool_version", "verdict", "method", "weights",
//                 "projector_r", "povm", "bloch_weights", "chart",
//                 "fidelity", "notes"}

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "antidist/group.hpp"
#include "antidist/linalg.hpp"
#include "antidist/states.hpp"

namespace antidist {

using Json = nlohmann::json;

inline constexpr const char* kToolVersion = "antidist 1.0.0";

/// Rounds to 12 significant digits and flushes |x| < 1e-14 to zero.
double round12(double x);
/// printf("%.12g") with the same zero flushing.
std::string format12(double x);

Json complex_to_json(Complex z);
Complex complex_from_json(const Json& j);
Json vector_to_json(std::span<const Complex> v);
CVector vector_from_json(const Json& j);
Json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const Json& j);

struct StateSetFile {
    std::size_t dim = 0;
    std::vector<CVector> states;
    std::vector<std::string> labels;
};

StateSetFile state_set_file_from_json(const Json& j);
Json to_json(const StateSetFile& f);
StateSetFile make_state_set_file(const StateSet& set, std::vector<std::string> labels = {});
/// Labels default to "s1", "s2", ...
std::vector<std::string> labels_or_default(const StateSetFile& f);
StateSet to_state_set(const StateSetFile& f);

/// Accepts a POVM document or a certificate carrying a "povm" field.
Povm povm_from_json(const Json& j, Tolerance tol = {});
Json to_json(const Povm& m);

GroupRep group_from_json(const Json& j, Tolerance tol = {});
Json to_json(const GroupRep& rep);

ChartEvidence chart_evidence_from_json(const Json& j);
Json to_json(const ChartEvidence& chart);

Json to_json(const Certificate& cert);
Certificate certificate_from_json(const Json& j, Tolerance tol = {});

/// Two-space indented JSON with a trailing newline.
std::string dump(const Json& j);

/// Throws ParseError with the path in the message.
Json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace antidist
