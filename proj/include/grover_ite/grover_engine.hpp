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

#include <vector>

#include "grover_ite/pf_compiler.hpp"
#include "grover_ite/search_core.hpp"

namespace grover_ite {

enum class NamedKind { OriginalPi, PiOverThree, FixedPointChebyshev };

struct NamedSchedule {
    NamedKind kind = NamedKind::OriginalPi;
    int iterations = 1;
    double delta = 0.0;  // FixedPointChebyshev only
};

AngleSchedule named_schedule(const NamedSchedule& named);

/// alpha_k = beta_{N-k+1} = -2 acot(tan(2 pi k / L) sqrt(1 - 1/gamma^2)),
/// L = 2N + 1, gamma = cosh(arccosh(1/delta) / L).
AngleSchedule fixed_point_angles(int iterations, double delta);

StateVector diffusion(const SearchInstance& inst, double alpha, const StateVector& s);
ReducedState diffusion(const SearchInstance& inst, double alpha, const ReducedState& r);
StateVector oracle(const SearchInstance& inst, double beta, const StateVector& s);
ReducedState oracle(const SearchInstance& inst, double beta, const ReducedState& r);

enum class Mode { Full, Reduced };

struct RunResult {
    StateVector state;
    /// Success probability before the first pulse and after every diffusion
    /// pulse (one entry per Grover iterate), plus a final entry if the
    /// schedule ends on an oracle pulse.
    std::vector<double> trace;
};

RunResult run_schedule(const SearchInstance& inst, const AngleSchedule& schedule, Mode mode);
RunResult run_schedule(const SearchInstance& inst, const NamedSchedule& named, Mode mode);

double success_probability(const SearchInstance& inst, const StateVector& s);
double success_probability(const SearchInstance& inst, const ReducedState& r);

}  // namespace grover_ite
