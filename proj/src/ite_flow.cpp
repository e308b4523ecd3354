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
#include "grover_ite/ite_flow.hpp"

#include <cmath>
#include <string>

#include "grover_ite/numeric.hpp"

namespace grover_ite {
namespace {

double checked_tau(double tau) {
    if (!(tau >= 0.0)) fail(ErrorCode::DomainError, "tau must be >= 0, got " + std::to_string(tau));
    return std::min(tau, kMaxTau);
}

}  // namespace

StateVector ite_state(const SearchInstance& inst, double tau) {
    inst.require_nondegenerate();
    tau = checked_tau(tau);
    // Divided through by e^tau: marked entries 1, unmarked e^{-tau}.
    const double low = std::exp(-tau);
    const double m = static_cast<double>(inst.num_marked());
    const double rest = static_cast<double>(inst.dim()) - m;
    const double norm = std::sqrt(m + rest * low * low);
    Eigen::VectorXcd v = Eigen::VectorXcd::Constant(inst.dim(), Complex(low / norm, 0.0));
    for (auto i : inst.marked()) v[i] = 1.0 / norm;
    return StateVector(std::move(v));
}

FlowPoint commutator_flow_state(const SearchInstance& inst, double s) {
    inst.require_nondegenerate();
    const double angle = s * std::sqrt(inst.v0());
    return {s, ReducedState{std::cos(angle), std::sin(angle)}};
}

double duration_from_tau(const SearchInstance& inst, double tau) {
    inst.require_nondegenerate();
    tau = checked_tau(tau);
    // Reduced coordinates of (I + cH_f)|psi0> are (1 + c E0, c sqrt(V0)); both
    // are scaled by e^{-tau} here so nothing overflows.
    const double sv = std::sqrt(inst.v0());
    const double grown = -std::expm1(-tau);  // 1 - e^{-tau}
    return std::atan2(grown * sv, std::exp(-tau) + grown * inst.e0()) / sv;
}

double optimal_duration(const SearchInstance& inst) {
    inst.require_nondegenerate();
    return guarded_acos(std::sqrt(inst.e0())) / std::sqrt(inst.v0());
}

LinearStep synth_linear_step(const DenseOperator& hamiltonian, const StateVector& psi, double x,
                             double y) {
    if (x == 0.0 && y == 0.0) fail(ErrorCode::NullDirection, "(x, y) = (0, 0)");
    if (hamiltonian.rows() != psi.size() || hamiltonian.cols() != psi.size()) {
        fail(ErrorCode::DomainError, "hamiltonian and state dimensions differ");
    }
    const Eigen::VectorXcd& v = psi.amplitudes();
    const Eigen::VectorXcd hv = hamiltonian * v;
    const double e = v.dot(hv).real();
    const double var = hv.squaredNorm() - e * e;
    if (!(var > 1e-14)) fail(ErrorCode::ZeroVariance, "state variance " + std::to_string(var));
    const double sv = std::sqrt(var);

    const double len = (x * v + y * hv).norm();
    const double sign = y < 0.0 ? -1.0 : 1.0;
    const double s = -sign / sv * guarded_acos((x + y * e) / len);
    const double angle = s * sv;
    return {s, e / sv * std::sin(angle) + std::cos(angle), -std::sin(angle) / sv};
}

DenseOperator exact_commutator_exponential(const SearchInstance& inst, double s) {
    inst.require_nondegenerate();
    require_dense(inst);
    const Eigen::VectorXcd a = make_initial(inst).amplitudes();
    const Eigen::VectorXcd b = make_perp(inst).amplitudes();
    const double angle = s * std::sqrt(inst.v0());
    const double c = std::cos(angle) - 1.0;
    const double sn = std::sin(angle);
    DenseOperator u = DenseOperator::Identity(inst.dim(), inst.dim());
    u.noalias() += c * (a * a.adjoint() + b * b.adjoint());
    u.noalias() += sn * (b * a.adjoint() - a * b.adjoint());
    return u;
}

}  // namespace grover_ite
