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

// Decision pipeline: cheap exact tests first, heuristic chart search last.

#pragma once

#include <cstdint>
#include <optional>

#include "antidist/chart.hpp"
#include "antidist/states.hpp"

namespace antidist {

struct CheckOptions {
    Tolerance tol{};
    std::uint64_t budget = 10000;
    std::uint64_t seed = 0;
    /// Tried before the random search when present.
    std::optional<ChartEvidence> seed_chart;
};

/// Runs, in order: pairwise orthogonality, the qubit decision (d = 2), the
/// fidelity bound, the projector-sum condition, chart search. The first
/// pathway that settles the question produces the certificate; otherwise the
/// verdict is Unknown. A Yes certificate always carries a verifying POVM.
Certificate check_states(const StateSet& set, const CheckOptions& options = {});

/// Re-checks the evidence in `cert` against `set`. Yes needs a verifying POVM,
/// No is recomputed from its method, Unknown is always consistent.
bool certificate_holds(const Certificate& cert, const StateSet& set, Tolerance tol = {});

/// 0 for Yes, 1 for No, 3 for Unknown.
int exit_code(Verdict v);

}  // namespace antidist
