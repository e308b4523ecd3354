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

#include <cmath>
#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "grover_ite/error.hpp"

namespace grover_ite {

using Complex = std::complex<double>;
using DenseOperator = Eigen::MatrixXcd;

inline constexpr int kMaxQubits = 14;
inline constexpr std::int64_t kMaxDenseDim = 4096;

/// Unstructured-search problem: n qubits and a sorted set of marked basis
/// indices. Instances with M = 0 or M = N can be built but are rejected by
/// everything that needs a nonzero variance.
class SearchInstance {
public:
    SearchInstance(int n_qubits, std::vector<std::int64_t> marked);

    /// First `m` basis indices marked; convenient for sweeps over M.
    static SearchInstance with_prefix_marked(int n_qubits, std::int64_t m);

    int n_qubits() const noexcept { return n_qubits_; }
    std::int64_t dim() const noexcept { return dim_; }
    std::int64_t num_marked() const noexcept { return static_cast<std::int64_t>(marked_.size()); }
    std::span<const std::int64_t> marked() const noexcept { return marked_; }
    bool is_marked(std::int64_t index) const;

    double e0() const noexcept { return e0_; }
    double v0() const noexcept { return e0_ * (1.0 - e0_); }

    /// Throws DegenerateInstance unless 1 <= M <= N-1.
    void require_nondegenerate() const;

private:
    int n_qubits_;
    std::int64_t dim_;
    std::vector<std::int64_t> marked_;
    double e0_;
};

/// Length-N amplitude vector. Everything except apply_projector hands out
/// unit-norm vectors; the flag records which kind a caller is holding.
class StateVector {
public:
    StateVector() = default;
    explicit StateVector(Eigen::VectorXcd amplitudes, bool normalized = true)
        : amplitudes_(std::move(amplitudes)), normalized_(normalized) {}

    const Eigen::VectorXcd& amplitudes() const noexcept { return amplitudes_; }
    Eigen::Index size() const noexcept { return amplitudes_.size(); }
    Complex operator[](Eigen::Index i) const { return amplitudes_[i]; }
    double norm() const { return amplitudes_.norm(); }
    bool is_normalized() const noexcept { return normalized_; }

private:
    Eigen::VectorXcd amplitudes_;
    bool normalized_ = true;
};

/// <a|b>
Complex inner(const StateVector& a, const StateVector& b);

/// Coordinates in the ordered basis {|psi0>, |psi0_perp>}.
struct ReducedState {
    Complex c0{1.0, 0.0};
    Complex c1{0.0, 0.0};

    Eigen::Vector2cd vec() const { return {c0, c1}; }
    static ReducedState from(const Eigen::Vector2cd& v) { return {v[0], v[1]}; }
    double norm() const { return std::sqrt(std::norm(c0) + std::norm(c1)); }
};

struct Reduction {
    ReducedState state;
    double residual = 0.0;  // norm of the component outside span{psi0, psi0_perp}
};

StateVector make_initial(const SearchInstance& inst);
StateVector make_solution(const SearchInstance& inst);
StateVector make_perp(const SearchInstance& inst);

/// H_f |s>. The result is not renormalized.
StateVector apply_projector(const SearchInstance& inst, const StateVector& s);

Reduction reduce(const SearchInstance& inst, const StateVector& s);
StateVector embed(const SearchInstance& inst, const ReducedState& r);

// Dense building blocks for small-N operator measurements.
DenseOperator dense_marked_projector(const SearchInstance& inst);
DenseOperator dense_initial_projector(const SearchInstance& inst);
void require_dense(const SearchInstance& inst);

}  // namespace grover_ite
