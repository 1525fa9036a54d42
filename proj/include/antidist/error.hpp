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

#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace antidist {

enum class ErrorKind {
    InvalidArgument,
    NonFinite,
    DimensionMismatch,
    NonSquare,
    NonHermitian,
    EmptyInput,
    SingularSystem,
    ZeroVector,
    NormOutOfRange,
    InvalidState,
    DuplicateState,
    NotPsd,
    NotNormalized,
    CountMismatch,
    RankTooSmall,
    OverlappingSets,
    DimensionOne,
    WrongDimension,
    MixedStateInput,
    NotUnitary,
    NotClosed,
    MissingIdentity,
    FixedPoint,
    NotScalarOnSupport,
    TooLarge,
    ShapeMismatch,
    InvalidChart,
    ParseError,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library. `kind()` is stable and is what
/// callers should branch on; the message is for humans.
///
/// Some kinds carry extra context: NotPsd records the offending effect index,
/// NotNormalized records the residual norm of the effect sum.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    Error(ErrorKind kind, const std::string& message, std::size_t index)
        : Error(kind, message) {
        index_ = index;
    }

    Error(ErrorKind kind, const std::string& message, double value)
        : Error(kind, message) {
        value_ = value;
    }

    ErrorKind kind() const noexcept { return kind_; }
    std::optional<std::size_t> index() const noexcept { return index_; }
    std::optional<double> value() const noexcept { return value_; }

private:
    ErrorKind kind_;
    std::optional<std::size_t> index_;
    std::optional<double> value_;
};

}  // namespace antidist
