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
#include "grover_ite/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "grover_ite/csv.hpp"

namespace grover_ite {
namespace {

using nlohmann::json;

std::string num(double v) {
    if (!std::isfinite(v)) fail(ErrorCode::NumericalDomain, "cannot serialize a non-finite number");
    return format_double(v);
}

std::string num_list(const std::vector<double>& xs) {
    std::string out = "[";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ',';
        out += num(xs[i]);
    }
    return out + "]";
}

json parse(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        fail(ErrorCode::ConfigInvalid, std::string("malformed JSON: ") + e.what());
    }
}

template <typename T>
T field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) {
        fail(ErrorCode::ConfigInvalid, std::string("missing key '") + key + "'");
    }
    try {
        return j.at(key).get<T>();
    } catch (const json::exception&) {
        fail(ErrorCode::ConfigInvalid, std::string("bad value for '") + key + "'");
    }
}

}  // namespace

std::string schedule_to_json(const AngleSchedule& schedule) {
    std::string out = "{\"s_target\":" + num(schedule.s_target) +
                      ",\"claimed_order\":" + std::to_string(schedule.claimed_order) +
                      ",\"pulses\":[";
    for (std::size_t i = 0; i < schedule.pulses.size(); ++i) {
        const Pulse& p = schedule.pulses[i];
        if (i) out += ',';
        out += std::string("{\"g\":\"") + (p.generator == Generator::Diffusion ? "D" : "O") +
               "\",\"theta\":" + num(p.angle) + "}";
    }
    out += "]";
    if (schedule.global_phase != 0.0) out += ",\"global_phase\":" + num(schedule.global_phase);
    return out + "}";
}

AngleSchedule schedule_from_json(std::string_view text) {
    const json j = parse(text);
    AngleSchedule s;
    s.s_target = field<double>(j, "s_target");
    s.claimed_order = field<int>(j, "claimed_order");
    if (j.contains("global_phase")) s.global_phase = field<double>(j, "global_phase");
    const json pulses = field<json>(j, "pulses");
    if (!pulses.is_array()) fail(ErrorCode::ConfigInvalid, "'pulses' must be an array");
    for (const auto& p : pulses) {
        const auto g = field<std::string>(p, "g");
        if (g != "D" && g != "O") fail(ErrorCode::ConfigInvalid, "pulse generator '" + g + "'");
        s.pulses.push_back({g == "D" ? Generator::Diffusion : Generator::Oracle,
                            field<double>(p, "theta")});
    }
    return s;
}

std::string phases_to_json(const QspPhases& phases) {
    return std::string("{\"convention\":\"") + (phases.convention == Convention::R ? "R" : "W") +
           "\",\"phases\":" + num_list(phases.phases) + "}";
}

QspPhases phases_from_json(std::string_view text) {
    const json j = parse(text);
    QspPhases p;
    const auto conv = field<std::string>(j, "convention");
    if (conv != "R" && conv != "W") fail(ErrorCode::ConfigInvalid, "convention '" + conv + "'");
    p.convention = conv == "R" ? Convention::R : Convention::W;
    p.phases = field<std::vector<double>>(j, "phases");
    if (p.phases.empty()) fail(ErrorCode::ConfigInvalid, "empty phase list");
    return p;
}

std::string poly_to_json(const ChebyshevPoly& poly) {
    std::string out = std::string("{\"basis\":\"chebyshev-T\",\"parity\":\"") +
                      std::string(to_string(poly.parity())) + "\",\"coeffs\":" +
                      num_list(poly.coeffs());
    if (poly.half_width() != 1.0) out += ",\"domain_half_width\":" + num(poly.half_width());
    return out + "}";
}

ChebyshevPoly poly_from_json(std::string_view text) {
    const json j = parse(text);
    if (field<std::string>(j, "basis") != "chebyshev-T") {
        fail(ErrorCode::ConfigInvalid, "only the chebyshev-T basis is supported");
    }
    const double hw = j.contains("domain_half_width") ? field<double>(j, "domain_half_width") : 1.0;
    try {
        return ChebyshevPoly(field<std::vector<double>>(j, "coeffs"),
                             parse_parity(field<std::string>(j, "parity")), hw);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::ConfigInvalid) throw;
        fail(ErrorCode::ConfigInvalid, e.what());
    }
}

std::string report_to_json(const AchievabilityReport& report) {
    std::string out = "{\"all\":" + std::string(report.all() ? "true" : "false") + ",\"conditions\":[";
    for (std::size_t i = 0; i < report.checks.size(); ++i) {
        const auto& c = report.checks[i];
        if (i) out += ',';
        out += "{\"condition\":" + std::to_string(c.condition) +
               ",\"satisfied\":" + (c.satisfied ? "true" : "false") +
               ",\"witness_x\":" + num(c.witness_x) + ",\"margin\":" + num(c.margin) + "}";
    }
    return out + "]}";
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorCode::IoError, "cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
    if (path.has_parent_path()) {
        std::error_code ec;
        std::filesystem::create_directories(path.parent_path(), ec);
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) fail(ErrorCode::IoError, "cannot write " + path.string());
    out << text;
    if (!out) fail(ErrorCode::IoError, "write failed for " + path.string());
}

}  // namespace grover_ite
