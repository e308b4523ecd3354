// Copyright 2026 The grover-ite-lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace grover_ite {

enum class ErrorCode {
    InvalidInstance,
    EmptyMarkedSet,
    DegenerateInstance,
    DimensionTooLarge,
    DomainError,
    NumericalDomain,
    ZeroVariance,
    NullDirection,
    NotOrthonormal,
    DepthExceeded,
    NegativeDuration,
    InsufficientData,
    NonAlternatingSchedule,
    DegreeTooSmall,
    OptimizerDiverged,
    NormDrift,
    ConfigInvalid,
    IoError,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// callers (and the CLI's exit-code mapping) can dispatch without parsing text.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

inline std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::InvalidInstance: return "InvalidInstance";
    case ErrorCode::EmptyMarkedSet: return "EmptyMarkedSet";
    case ErrorCode::DegenerateInstance: return "DegenerateInstance";
    case ErrorCode::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::NumericalDomain: return "NumericalDomain";
    case ErrorCode::ZeroVariance: return "ZeroVariance";
    case ErrorCode::NullDirection: return "NullDirection";
    case ErrorCode::NotOrthonormal: return "NotOrthonormal";
    case ErrorCode::DepthExceeded: return "DepthExceeded";
    case ErrorCode::NegativeDuration: return "NegativeDuration";
    case ErrorCode::InsufficientData: return "InsufficientData";
    case ErrorCode::NonAlternatingSchedule: return "NonAlternatingSchedule";
    case ErrorCode::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorCode::OptimizerDiverged: return "OptimizerDiverged";
    case ErrorCode::NormDrift: return "NormDrift";
    case ErrorCode::ConfigInvalid: return "ConfigInvalid";
    case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

}  // namespace grover_ite
