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
#include <functional>
#include <optional>
#include <vector>

#include "grover_ite/chebyshev.hpp"
#include "grover_ite/pf_compiler.hpp"
#include "grover_ite/qsp.hpp"

namespace grover_ite {

using Target = std::function<double(double)>;

struct FitOptions {
    double lambda1 = 0.01;
    double lambda2 = 0.1;
    int n_d = 50;
    std::uint64_t seed = 0;
    int restarts = 8;
    /// Starting point of restart 0 (K + 1 phases); later restarts perturb it.
    std::optional<std::vector<double>> initial;
};

struct FitResult {
    QspPhases phases;
    double cost = 0.0;
    double mse = 0.0;           // mean (p - Re v0)^2
    double imag_leakage = 0.0;  // mean (Im v0)^2
    int best_restart = 0;
};

/// Midpoints (i - 1/2) / n_d, i = 1..n_d, of [0, 1].
std::vector<double> fit_samples(int n_d);

/// mean (t - Re v0)^2 + lambda1 mean (Im v0)^2 + lambda2 mean arg(v0 conj(v1))^2
/// over the samples, for R-convention phases.
double fit_cost(const std::vector<double>& phases, const std::vector<double>& xs,
                const std::vector<double>& target, double lambda1, double lambda2);

FitResult fit_phases(const Target& target, int k, const FitOptions& options = {});
FitResult fit_phases(const ChebyshevPoly& target, int k, const FitOptions& options = {});

/// QSP phases of the fragmented group-commutator schedule for duration s
/// with `iterations` Grover iterates; a warm start for ITE fits.
std::vector<double> group_commutator_phases(int iterations, double s);

/// Grover schedule from K = 2N - 1 fitted phases: beta_l = 2 phi_{2l-1},
/// alpha_l = 2 phi_{2l}, alpha_N = 0.
AngleSchedule schedule_from_sign_phases(const QspPhases& phases);

/// Fits the sign polynomial with 2N - 1 signal operators and returns the
/// corresponding Grover schedule.
AngleSchedule fixed_point_via_sign(int iterations, double eta, double delta_cap,
                                   std::uint64_t seed, FitResult* fit = nullptr);

}  // namespace grover_ite
