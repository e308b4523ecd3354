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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "grover_ite/error.hpp"

namespace grover_ite {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kAcosGuard = 1e-12;

/// arccos with a small tolerance for rounding just outside [-1, 1].
inline double guarded_acos(double x) {
    if (!(std::abs(x) <= 1.0 + kAcosGuard)) {
        fail(ErrorCode::NumericalDomain, "arccos argument " + std::to_string(x) + " outside [-1, 1]");
    }
    return std::acos(std::clamp(x, -1.0, 1.0));
}

}  // namespace grover_ite
