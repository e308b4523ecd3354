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

#include <filesystem>
#include <string>
#include <string_view>

#include "grover_ite/chebyshev.hpp"
#include "grover_ite/pf_compiler.hpp"
#include "grover_ite/qsp.hpp"

namespace grover_ite {

// JSON exchange formats. Writers use a fixed key order and shortest
// round-trip decimals; readers throw ConfigInvalid on malformed input.

std::string schedule_to_json(const AngleSchedule& schedule);
AngleSchedule schedule_from_json(std::string_view text);

std::string phases_to_json(const QspPhases& phases);
QspPhases phases_from_json(std::string_view text);

std::string poly_to_json(const ChebyshevPoly& poly);
ChebyshevPoly poly_from_json(std::string_view text);

std::string report_to_json(const AchievabilityReport& report);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace grover_ite
