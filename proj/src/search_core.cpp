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

#include "grover_ite/search_core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace grover_ite {

SearchInstance::SearchInstance(int n_qubits, std::vector<std::int64_t> marked)
    : n_qubits_(n_qubits), marked_(std::move(marked)) {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        fail(ErrorCode::InvalidInstance,
             "n_qubits must lie in [1, " + std::to_string(kMaxQubits) + "], got " +
                 std::to_string(n_qubits));
    }
    dim_ = std::int64_t{1} << n_qubits;
    std::sort(marked_.begin(), marked_.end());
    marked_.erase(std::unique(marked_.begin(), marked_.end()), marked_.end());
    if (!marked_.empty() && (marked_.front() < 0 || marked_.back() >= dim_)) {
        fail(ErrorCode::InvalidInstance, "marked index outside [0, " + std::to_string(dim_) + ")");
    }
    e0_ = static_cast<double>(marked_.size()) / static_cast<double>(dim_);
}

SearchInstance SearchInstance::with_prefix_marked(int n_qubits, std::int64_t m) {
    if (m < 0) fail(ErrorCode::InvalidInstance, "negative marked count");
    std::vector<std::int64_t> idx(static_cast<std::size_t>(m));
    std::iota(idx.begin(), idx.end(), std::int64_t{0});
    return SearchInstance(n_qubits, std::move(idx));
}

bool SearchInstance::is_marked(std::int64_t index) const {
    return std::binary_search(marked_.begin(), marked_.end(), index);
}

void SearchInstance::require_nondegenerate() const {
    if (marked_.empty() || num_marked() == dim_) {
        fail(ErrorCode::DegenerateInstance,
             "operation needs 1 <= M <= N-1 (M=" + std::to_string(num_marked()) +
                 ", N=" + std::to_string(dim_) + ")");
    }
}

Complex inner(const StateVector& a, const StateVector& b) {
    return a.amplitudes().dot(b.amplitudes());  // Eigen conjugates the left operand
}

StateVector make_initial(const SearchInstance& inst) {
    const double amp = 1.0 / std::sqrt(static_cast<double>(inst.dim()));
    return StateVector(Eigen::VectorXcd::Constant(inst.dim(), Complex(amp, 0.0)));
}

StateVector make_solution(const SearchInstance& inst) {
    if (inst.num_marked() == 0) fail(ErrorCode::EmptyMarkedSet, "no marked items");
    const double amp = 1.0 / std::sqrt(static_cast<double>(inst.num_marked()));
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(inst.dim());
    for (auto i : inst.marked()) v[i] = amp;
    return StateVector(std::move(v));
}

// (H_f - E0 I)|psi0> / sqrt(V0), evaluated entrywise.
StateVector make_perp(const SearchInstance& inst) {
    inst.require_nondegenerate();
    const double e0 = inst.e0();
    const double scale = 1.0 / (std::sqrt(static_cast<double>(inst.dim())) * std::sqrt(inst.v0()));
    Eigen::VectorXcd v = Eigen::VectorXcd::Constant(inst.dim(), Complex(-e0 * scale, 0.0));
    for (auto i : inst.marked()) v[i] = (1.0 - e0) * scale;
    return StateVector(std::move(v));
}

StateVector apply_projector(const SearchInstance& inst, const StateVector& s) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(s.size());
    for (auto i : inst.marked()) v[i] = s[i];
    return StateVector(std::move(v), false);
}

namespace {

// psi0_perp takes one value on marked entries and another on unmarked ones.
struct PerpAmplitudes {
    double marked;
    double unmarked;
};

PerpAmplitudes perp_amplitudes(const SearchInstance& inst) {
    const double n = static_cast<double>(inst.dim());
    const double m = static_cast<double>(inst.num_marked());
    return {std::sqrt((1.0 - inst.e0()) / m), -std::sqrt(inst.e0() / (n - m))};
}

}  // namespace

Reduction reduce(const SearchInstance& inst, const StateVector& s) {
    inst.require_nondegenerate();
    const auto perp = perp_amplitudes(inst);
    const double amp0 = 1.0 / std::sqrt(static_cast<double>(inst.dim()));

    const Complex total = s.amplitudes().sum();
    Complex marked_sum{0.0, 0.0};
    for (auto i : inst.marked()) marked_sum += s[i];
    const Complex c0 = amp0 * total;
    const Complex c1 = perp.marked * marked_sum + perp.unmarked * (total - marked_sum);

    ReducedState r{c0, c1};
    const double residual = (s.amplitudes() - embed(inst, r).amplitudes()).norm();
    return {r, residual};
}

StateVector embed(const SearchInstance& inst, const ReducedState& r) {
    inst.require_nondegenerate();
    const auto perp = perp_amplitudes(inst);
    const double amp0 = 1.0 / std::sqrt(static_cast<double>(inst.dim()));
    Eigen::VectorXcd v =
        Eigen::VectorXcd::Constant(inst.dim(), amp0 * r.c0 + perp.unmarked * r.c1);
    const Complex on_marked = amp0 * r.c0 + perp.marked * r.c1;
    for (auto i : inst.marked()) v[i] = on_marked;
    return StateVector(std::move(v));
}

void require_dense(const SearchInstance& inst) {
    if (inst.dim() > kMaxDenseDim) {
        fail(ErrorCode::DimensionTooLarge,
             "dense operators are limited to N <= " + std::to_string(kMaxDenseDim));
    }
}

DenseOperator dense_marked_projector(const SearchInstance& inst) {
    require_dense(inst);
    DenseOperator h = DenseOperator::Zero(inst.dim(), inst.dim());
    for (auto i : inst.marked()) h(i, i) = 1.0;
    return h;
}

DenseOperator dense_initial_projector(const SearchInstance& inst) {
    require_dense(inst);
    const double n = static_cast<double>(inst.dim());
    return DenseOperator::Constant(inst.dim(), inst.dim(), Complex(1.0 / n, 0.0));
}

}  // namespace grover_ite
