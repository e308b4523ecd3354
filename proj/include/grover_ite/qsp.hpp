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

#include <array>
#include <vector>

#include <Eigen/Dense>

#include "grover_ite/chebyshev.hpp"
#include "grover_ite/pf_compiler.hpp"

namespace grover_ite {

/// W(x) = e^{i x X / 2}-type signal operator, or the reflection R(x).
enum class Convention { W, R };

/// Phases phi_0..phi_K. The sequence is
/// S_Z(phi_K) Sig(x) S_Z(phi_{K-1}) ... Sig(x) S_Z(phi_0), so phi_0 acts first,
/// with S_Z(phi) = e^{i phi Z}.
struct QspPhases {
    std::vector<double> phases{0.0};
    Convention convention = Convention::R;

    int k() const noexcept { return static_cast<int>(phases.size()) - 1; }
};

Eigen::Matrix2cd signal_operator(Convention convention, double x);
Eigen::Matrix2cd processing_operator(double phi);

Eigen::Matrix2cd qsp_matrix(const QspPhases& phases, double x);
/// <0| sequence |0>
Complex qsp_value(const QspPhases& phases, double x);
/// sequence |0>
Eigen::Vector2cd qsp_state(const QspPhases& phases, double x);

/// Switches between the W and R conventions. The <0|.|0> entry is preserved
/// exactly; the full matrices differ by diag(1, (-1)^K).
QspPhases convert_convention(const QspPhases& phases);

/// K = 2N phases: phi_0 = N pi + sum (alpha + beta) / 2, phi_{2l-1} = beta_l / 2,
/// phi_{2l} = alpha_l / 2.
QspPhases grover_to_qsp(const std::vector<GroverStep>& steps);
QspPhases grover_to_qsp(const AngleSchedule& schedule);
/// Reads (alpha_l, beta_l) = (2 phi_{2l}, 2 phi_{2l-1}); phi_0 only sets a
/// global phase and is dropped. Needs R convention and even K.
std::vector<GroverStep> qsp_to_grover(const QspPhases& phases);

/// prod_l -D(alpha_l) U_f(beta_l) in the {psi0, psi0_perp} basis.
Eigen::Matrix2cd reduced_grover_product(double e0, const std::vector<GroverStep>& steps);

struct AchievabilityCheck {
    int condition = 0;
    bool satisfied = false;
    double witness_x = 0.0;  // worst point found
    double margin = 0.0;     // distance from the bound at the witness; negative on failure
};

struct AchievabilityReport {
    std::array<AchievabilityCheck, 5> checks{};

    bool all() const noexcept;
    bool first(int count) const noexcept;
};

/// Degree <= K, parity K mod 2, |p| <= 1 on [-1, 1], |p| >= 1 for |x| >= 1,
/// and for even K, |p(ix)|^2 >= 1 on the real line. Bound checks allow
/// `tolerance`.
AchievabilityReport check_achievability(const ChebyshevPoly& poly, int k, double tolerance = 1e-8);

}  // namespace grover_ite
