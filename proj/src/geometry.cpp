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
#include "grover_ite/geometry.hpp"

#include <cmath>
#include <string>

#include <Eigen/SVD>

#include "grover_ite/ite_flow.hpp"
#include "grover_ite/numeric.hpp"
#include "grover_ite/operators.hpp"

namespace grover_ite {

double fs_distance(const StateVector& a, const StateVector& b) {
    const double overlap = std::abs(inner(a, b));
    return std::acos(std::clamp(overlap, 0.0, 1.0));
}

GeodesicSpec make_geodesic_spec(const StateVector& a, const StateVector& b) {
    return {a, b, fs_distance(a, b)};
}

StateVector geodesic_point(const StateVector& phi1, const StateVector& phi2, double t) {
    if (phi1.size() != phi2.size() || std::abs(inner(phi1, phi2)) > 1e-10 ||
        std::abs(phi1.norm() - 1.0) > 1e-10 || std::abs(phi2.norm() - 1.0) > 1e-10) {
        fail(ErrorCode::NotOrthonormal, "geodesic endpoints must be an orthonormal pair");
    }
    return StateVector(std::cos(t) * phi1.amplitudes() + std::sin(t) * phi2.amplitudes());
}

double su_geodesic_length(const SearchInstance& inst) {
    inst.require_nondegenerate();
    return std::sqrt(2.0) * guarded_acos(std::sqrt(inst.e0()));
}

double su_geodesic_length_hs(const SearchInstance& inst) {
    inst.require_nondegenerate();
    double hs = 0.0;
    if (inst.dim() <= kMaxDenseDim) {
        const DenseOperator h = dense_marked_projector(inst);
        const DenseOperator p = dense_initial_projector(inst);
        hs = (h * p - p * h).norm();
    } else {
        // [H_f, psi0] = |H psi0><psi0| - |psi0><H psi0|, a rank-two operator.
        hs = std::sqrt(2.0 * inst.v0());
    }
    return optimal_duration(inst) * hs;
}

std::int64_t query_bound(double epsilon, double d_fs) {
    if (!(epsilon > 0.0 && epsilon < 2.0)) {
        fail(ErrorCode::DomainError, "epsilon must lie in (0, 2), got " + std::to_string(epsilon));
    }
    const double gap = kPi / 2.0 - d_fs;
    if (!(d_fs >= 0.0) || !(gap > 0.0)) {
        fail(ErrorCode::DomainError, "d_fs must lie in [0, pi/2), got " + std::to_string(d_fs));
    }
    return static_cast<std::int64_t>(std::ceil(kQueryConstant / (epsilon * epsilon) / gap));
}

double gci_error_bound(const SearchInstance& inst, double s) {
    inst.require_nondegenerate();
    if (!(s >= 0.0)) fail(ErrorCode::NegativeDuration, "s must be >= 0");
    return std::pow(s, 1.5) * 2.0 * std::sqrt(2.0 * inst.v0());
}

double measured_gci_error(const SearchInstance& inst, double s) {
    inst.require_nondegenerate();
    require_dense(inst);
    if (!(s >= 0.0)) fail(ErrorCode::NegativeDuration, "s must be >= 0");
    const double a = std::sqrt(s);
    DenseOperator u = DenseOperator::Identity(inst.dim(), inst.dim());
    apply_oracle(inst, -a, u);
    apply_diffusion(inst, -a, u);
    apply_oracle(inst, a, u);
    apply_diffusion(inst, a, u);
    return operator_norm(u - exact_commutator_exponential(inst, s));
}

DoubleCommutatorNorms double_commutator_norms(const SearchInstance& inst) {
    inst.require_nondegenerate();
    const DenseOperator h = dense_marked_projector(inst);
    const DenseOperator p = dense_initial_projector(inst);
    auto comm = [](const DenseOperator& x, const DenseOperator& y) -> DenseOperator {
        return x * y - y * x;
    };
    return {operator_norm(comm(h, comm(h, p))), operator_norm(comm(p, comm(p, h)))};
}

double operator_norm(const DenseOperator& op) {
    if (op.rows() > kMaxDenseDim || op.cols() > kMaxDenseDim) {
        fail(ErrorCode::DimensionTooLarge, "operator_norm limited to 4096 x 4096");
    }
    if (op.size() == 0) return 0.0;
    Eigen::BDCSVD<DenseOperator> svd(op);
    return svd.singularValues()(0);
}

}  // namespace grover_ite
