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

#include "grover_ite/search_core.hpp"

namespace grover_ite {

inline constexpr double kMaxTau = 700.0;

struct FlowPoint {
    double s = 0.0;
    ReducedState state;
};

/// Normalized (I + (e^tau - 1) H_f)|psi0>. tau is clamped to [0, 700].
StateVector ite_state(const SearchInstance& inst, double tau);

/// e^{s[H_f, psi0]}|psi0> in the reduced basis.
FlowPoint commutator_flow_state(const SearchInstance& inst, double s);

double duration_from_tau(const SearchInstance& inst, double tau);
double optimal_duration(const SearchInstance& inst);

struct LinearStep {
    double s = 0.0;
    double a = 1.0;
    double b = 0.0;
};

/// Writes the normalized (xI + yH)|psi> as (aI + bH)|psi>, with (a, b) the
/// coefficients reached by e^{s[psi, H]}|psi>.
LinearStep synth_linear_step(const DenseOperator& hamiltonian, const StateVector& psi, double x,
                             double y);

/// Rotation by s*sqrt(V0) in span{psi0, psi0_perp}, identity elsewhere.
DenseOperator exact_commutator_exponential(const SearchInstance& inst, double s);

}  // namespace grover_ite
