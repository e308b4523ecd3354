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

#include <complex>

#include <Eigen/Dense>

#include "grover_ite/search_core.hpp"

namespace grover_ite {

// In-place left multiplication by D(alpha) = I - (1 - e^{i alpha}) |psi0><psi0|
// and U_f(beta) = I - (1 - e^{i beta}) H_f. Works on vectors and matrices.

template <typename Derived>
void apply_diffusion(const SearchInstance& inst, double alpha, Eigen::MatrixBase<Derived>& m) {
    const Complex f = (1.0 - std::polar(1.0, alpha)) / static_cast<double>(inst.dim());
    const auto shift = (m.colwise().sum() * f).eval();
    m.rowwise() -= shift;
}

template <typename Derived>
void apply_oracle(const SearchInstance& inst, double beta, Eigen::MatrixBase<Derived>& m) {
    const Complex phase = std::polar(1.0, beta);
    for (auto i : inst.marked()) m.row(i) *= phase;
}

/// R(x) = [[x, sqrt(1-x^2)], [sqrt(1-x^2), -x]].
inline Eigen::Matrix2cd reflection(double x) {
    const double y = std::sqrt(std::max(0.0, 1.0 - x * x));
    Eigen::Matrix2cd r;
    r << x, y, y, -x;
    return r;
}

/// diag(e^{i phi}, 1)
inline Eigen::Matrix2cd phase_gate(double phi) {
    Eigen::Matrix2cd m = Eigen::Matrix2cd::Identity();
    m(0, 0) = std::polar(1.0, phi);
    return m;
}

inline Eigen::Matrix2cd reduced_diffusion(double alpha) { return phase_gate(alpha); }

inline Eigen::Matrix2cd reduced_oracle(const SearchInstance& inst, double beta) {
    const Eigen::Matrix2cd r = reflection(std::sqrt(inst.e0()));
    return r * phase_gate(beta) * r;
}

}  // namespace grover_ite
