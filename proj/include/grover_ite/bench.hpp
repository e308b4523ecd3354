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

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "grover_ite/csv.hpp"
#include "grover_ite/grover_engine.hpp"
#include "grover_ite/qsp_fit.hpp"

namespace grover_ite {

inline constexpr std::string_view kToolName = "grover-ite-lab";
inline constexpr std::string_view kToolVersion = GROVER_ITE_VERSION;

struct ExperimentConfig {
    std::string experiment = "custom";  // fig-a | fig-b | fig-c | fixed-point | custom
    std::vector<int> n_qubits;
    int iterations = 1;
    std::vector<double> s_values;
    double delta2 = 0.1;
    std::uint64_t seed = 0;
    std::string output;
    std::vector<std::string> schedules;          // custom only
    std::vector<std::int64_t> marked_counts;     // custom only; empty means 1..N-1
    bool use_cache = true;
};

ExperimentConfig default_config(std::string_view experiment);
/// Keys mirror the struct fields; missing keys keep the experiment defaults.
ExperimentConfig config_from_json(std::string_view text);
/// Canonical JSON of everything that affects results (output path and cache
/// switch excluded).
std::string config_to_json(const ExperimentConfig& config);
std::string config_hash(const ExperimentConfig& config);
/// "grover-ite-lab v<version> config=<hash prefix> seed=<seed>"
std::string csv_comment(const ExperimentConfig& config);

/// On-disk cache of fitted phases keyed by the fit inputs. Lookups also go
/// through an in-memory map so repeated targets inside one run are free.
class PhaseCache {
public:
    /// No directory: memory only.
    explicit PhaseCache(std::optional<std::filesystem::path> dir = std::nullopt)
        : dir_(std::move(dir)) {}

    /// GROVER_ITE_CACHE_DIR, else ~/.cache/grover-ite-lab.
    static std::filesystem::path default_directory();

    QspPhases fit(const Target& target, int k, const FitOptions& options);

    int hits() const noexcept { return hits_; }
    int misses() const noexcept { return misses_; }

private:
    std::optional<std::filesystem::path> dir_;
    std::map<std::string, QspPhases> memory_;
    int hits_ = 0;
    int misses_ = 0;
};

PhaseCache make_cache(const ExperimentConfig& config);

/// Fitted phases realizing cos(s x sqrt(1 - x^2)) with 2N signal operators,
/// warm-started from the group-commutator schedule.
QspPhases ite_phases(int iterations, double s, std::uint64_t seed, PhaseCache& cache);
AngleSchedule ite_schedule(int iterations, double s, std::uint64_t seed, PhaseCache& cache);

/// 1 - |<flow(s)|final>|^2 for a full-space run of the schedule.
double ite_infidelity(const SearchInstance& inst, const AngleSchedule& schedule, double s);

/// Smallest eta on the grid 0.01, 0.02, ... whose sign polynomial fits in
/// 2N - 1 signal operators.
double auto_sign_eta(int iterations, double delta_cap);
AngleSchedule sign_schedule(int iterations, double delta2, std::uint64_t seed, PhaseCache& cache);

/// Smallest M0 such that overlaps[M - 1] >= target for every M >= M0
/// (overlaps indexed by M = 1..N-1). Returns N when even M = N-1 fails.
std::int64_t valid_threshold(const std::vector<double>& overlaps, double target);

CsvTable run_fig_a(const ExperimentConfig& config, PhaseCache& cache);
CsvTable run_fig_b(const ExperimentConfig& config, PhaseCache& cache);
CsvTable run_fig_c(const ExperimentConfig& config, PhaseCache& cache);
CsvTable run_fixed_point(const ExperimentConfig& config, PhaseCache& cache);
CsvTable run_custom(const ExperimentConfig& config, PhaseCache& cache);

/// Dispatch on config.experiment.
CsvTable run_experiment(const ExperimentConfig& config, PhaseCache& cache);

/// Threshold checks used by --strict; empty when every check passes.
std::vector<std::string> contract_violations(const ExperimentConfig& config, const CsvTable& table);

}  // namespace grover_ite
