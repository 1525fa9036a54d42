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

// Small dense real solvers: a two-phase simplex for equality-form LPs and
// Lawson-Hanson nonnegative least squares. Sized for tens of variables.

#pragma once

#include <span>
#include <vector>

#include "antidist/linalg.hpp"

namespace antidist {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    std::vector<double> x;
    double objective = 0.0;
};

/// maximize c.x subject to A x = b, x >= 0. Bland's rule, so it terminates on
/// degenerate problems.
LpResult maximize_lp(const RealMatrix& a, std::span<const double> b, std::span<const double> c);

/// Least-squares solution of the (possibly rectangular) system A x = b via
/// Householder QR. Columns that are numerically dependent get a zero entry.
std::vector<double> least_squares(const RealMatrix& a, std::span<const double> b);

struct NnlsResult {
    std::vector<double> x;
    double residual_norm = 0.0;
};

/// argmin ||A x - b||_2 subject to x >= 0.
NnlsResult nnls(const RealMatrix& a, std::span<const double> b, int max_iterations = 0);

}  // namespace antidist
