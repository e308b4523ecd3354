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

#include "grover_ite/numeric.hpp"
#include "grover_ite/search_core.hpp"

namespace grover_ite {

/// (2 sqrt(2) pi)^2, the constant in front of the query count.
inline constexpr double kQueryConstant = 8.0 * kPi * kPi;

struct GeodesicSpec {
    StateVector endpoint_a;
    StateVector endpoint_b;
    double d_fs = 0.0;
};

GeodesicSpec make_geodesic_spec(const StateVector& a, const StateVector& b);

double fs_distance(const StateVector& a, const StateVector& b);

/// cos(t) phi1 + sin(t) phi2 for an orthonormal pair.
StateVector geodesic_point(const StateVector& phi1, const StateVector& phi2, double t);

/// sqrt(2) * arccos(sqrt(E0)).
double su_geodesic_length(const SearchInstance& inst);
/// s* times the Hilbert-Schmidt norm of [H_f, psi0]; a second route to the same number.
double su_geodesic_length_hs(const SearchInstance& inst);

/// Sufficient number of queries; even iteration counts. Odd counts need one more.
std::int64_t query_bound(double epsilon, double d_fs);

double gci_error_bound(const SearchInstance& inst, double s);
/// || D(a) U_f(a) D(-a) U_f(-a) - e^{s[H_f, psi0]} ||_op with a = sqrt(s).
double measured_gci_error(const SearchInstance& inst, double s);

struct DoubleCommutatorNorms {
    double oracle_side;     // ||[H_f, [H_f, psi0]]||_op
    double diffusion_side;  // ||[psi0, [psi0, H_f]]||_op
};
DoubleCommutatorNorms double_commutator_norms(const SearchInstance& inst);

/// Largest singular value.
double operator_norm(const DenseOperator& op);

}  // namespace grover_ite
