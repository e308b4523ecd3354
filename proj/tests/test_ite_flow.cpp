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
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "grover_ite/grover_engine.hpp"
#include "grover_ite/ite_flow.hpp"
#include "grover_ite/numeric.hpp"
#include "oracle.hpp"

using namespace grover_ite;

namespace {

std::vector<SearchInstance> family() {
    std::vector<SearchInstance> out;
    for (int n : {1, 2, 3, 5, 8}) {
        const std::int64_t dim = std::int64_t{1} << n;
        for (std::int64_t m : {std::int64_t{1}, dim / 4, dim / 2, dim - 1}) {
            if (m >= 1 && m < dim) out.push_back(SearchInstance::with_prefix_marked(n, m));
        }
    }
    return out;
}

double fidelity(const StateVector& a, const StateVector& b) { return std::norm(inner(a, b)); }

}  // namespace

TEST_CASE("ite closed form") {
    const SearchInstance inst(2, {0});
    const StateVector v = ite_state(inst, std::log(2.0));
    const double a = 2.0 / std::sqrt(7.0), b = 1.0 / std::sqrt(7.0);
    CHECK(std::abs(v[0] - a) < 1e-15);
    for (int i = 1; i < 4; ++i) CHECK(std::abs(v[i] - b) < 1e-15);

    // against exp(tau H_f) psi0
    for (const auto& inst2 : family()) {
        if (inst2.dim() > 64) continue;
        for (double tau : {0.0, 0.3, 2.0, 9.0}) {
            const Eigen::VectorXcd ref =
                (oracle::expm(tau * dense_marked_projector(inst2)) * make_initial(inst2).amplitudes())
                    .normalized();
            CHECK((ite_state(inst2, tau).amplitudes() - ref).norm() < 1e-12);
        }
    }
}

TEST_CASE("ite limits") {
    for (const auto& inst : family()) {
        CHECK((ite_state(inst, 0.0).amplitudes() - make_initial(inst).amplitudes()).norm() < 1e-15);
        CHECK(fidelity(ite_state(inst, 50.0), make_solution(inst)) >= 1.0 - 1e-10);
        CHECK(std::isfinite(ite_state(inst, 1e6).norm()));
        double last = -1.0;
        for (double tau = 0.0; tau <= 20.0; tau += 0.25) {
            const double f = fidelity(ite_state(inst, tau), make_solution(inst));
            CHECK(f >= last - 1e-15);
            last = f;
        }
    }
    CHECK_THROWS_AS(ite_state(SearchInstance(2, {0}), -1.0), Error);
}

TEST_CASE("flow states and durations") {
    const SearchInstance frozen(4, {0, 1, 2});
    CHECK(duration_from_tau(frozen, 1.0) == doctest::Approx(1.2026929227452496).epsilon(1e-14));
    CHECK(optimal_duration(frozen) == doctest::Approx(2.877090254066275).epsilon(1e-14));
    CHECK(optimal_duration(SearchInstance(1, {0})) == doctest::Approx(kPi / 2).epsilon(1e-15));

    for (const auto& inst : family()) {
        const auto f0 = commutator_flow_state(inst, 0.0);
        CHECK(f0.state.c0 == Complex(1.0, 0.0));
        const double ss = optimal_duration(inst);
        CHECK(ss * std::sqrt(inst.v0()) <= kPi / 2 + 1e-15);
        CHECK(fidelity(embed(inst, commutator_flow_state(inst, ss).state), make_solution(inst)) ==
              doctest::Approx(1.0).epsilon(1e-12));

        CHECK(duration_from_tau(inst, 0.0) == 0.0);
        CHECK(std::abs(duration_from_tau(inst, 30.0) - ss) < 1e-6);
        double last = -1.0;
        for (double tau = 0.0; tau <= 20.0; tau += 0.5) {
            const double d = duration_from_tau(inst, tau);
            CHECK(d >= last);
            CHECK(d <= ss + 1e-12);
            last = d;
            // arccos form
            const double c = std::expm1(tau);
            const double lit = std::acos(std::min(1.0, (1 + c * inst.e0()) /
                                                     std::sqrt(1 + std::expm1(2 * tau) * inst.e0()))) /
                               std::sqrt(inst.v0());
            CHECK(std::abs(d - lit) < 1e-6);
        }

        // Flow overshoots after s*, ITE never does.
        double prev = 2.0;
        for (double s = ss + 0.05; s <= ss + 1.0; s += 0.05) {
            const double f = success_probability(inst, commutator_flow_state(inst, s).state);
            CHECK(f < prev);
            prev = f;
        }
    }
}

TEST_CASE("ite equals flow at s_tau") {
    for (const auto& inst : family()) {
        for (int i = 0; i < 40; ++i) {
            const double tau = std::pow(10.0, -3.0 + i * std::log10(3e4) / 39.0);
            const StateVector a = ite_state(inst, tau);
            const StateVector b = embed(inst, commutator_flow_state(inst, duration_from_tau(inst, tau)).state);
            CHECK((a.amplitudes() - b.amplitudes()).norm() < 1e-10);
        }
    }
}

TEST_CASE("exact commutator exponential") {
    for (const auto& inst : family()) {
        if (inst.dim() > 64) continue;
        CHECK((exact_commutator_exponential(inst, 0.0) -
               DenseOperator::Identity(inst.dim(), inst.dim())).norm() < 1e-15);
        const DenseOperator hf = dense_marked_projector(inst);
        const DenseOperator p0 = dense_initial_projector(inst);
        for (double s : {0.3, 1.7, 4.0}) {
            const DenseOperator u = exact_commutator_exponential(inst, s);
            CHECK((u - oracle::expm(s * oracle::commutator(hf, p0))).norm() < 1e-10);
            CHECK((u.adjoint() * u - DenseOperator::Identity(inst.dim(), inst.dim())).norm() < 1e-12);
            const Eigen::VectorXcd applied = u * make_initial(inst).amplitudes();
            const StateVector flow = embed(inst, commutator_flow_state(inst, s).state);
            CHECK((applied - flow.amplitudes()).norm() < 1e-10);
        }
    }
    CHECK_THROWS_AS(exact_commutator_exponential(SearchInstance(13, {0}), 1.0), Error);
}

TEST_CASE("linear step synthesis") {
    const SearchInstance inst(4, {2, 9});
    const DenseOperator hf = dense_marked_projector(inst);
    const StateVector p0 = make_initial(inst);

    const auto id = synth_linear_step(hf, p0, 1.0, 0.0);
    CHECK(id.s == 0.0);
    CHECK(id.a == doctest::Approx(1.0));
    CHECK(id.b == doctest::Approx(0.0));

    // The generator is [psi, H] = -[H, psi]: durations come out negated.
    for (double tau : {0.1, 1.0, 5.0}) {
        const auto st = synth_linear_step(hf, p0, 1.0, std::expm1(tau));
        CHECK(st.s == doctest::Approx(-duration_from_tau(inst, tau)).epsilon(1e-12));
    }

    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        const DenseOperator h = oracle::random_hermitian(rng, 4);
        const StateVector psi(oracle::random_vector(rng, 4));
        for (auto [x, y] : {std::pair{0.7, 1.3}, std::pair{-0.4, 0.2}, std::pair{2.0, -3.0},
                            std::pair{-1.0, 0.0}, std::pair{0.0, 1.0}}) {
            const auto st = synth_linear_step(h, psi, x, y);
            const Eigen::VectorXcd want = (x * psi.amplitudes() + y * h * psi.amplitudes()).normalized();
            const Eigen::VectorXcd got = st.a * psi.amplitudes() + st.b * h * psi.amplitudes();
            CHECK((want - got).norm() < 1e-10);
            // e^{s[psi, H]} psi gives the same vector
            const Eigen::MatrixXcd pp = psi.amplitudes() * psi.amplitudes().adjoint();
            const Eigen::VectorXcd flow = oracle::expm(st.s * oracle::commutator(pp, h)) * psi.amplitudes();
            CHECK((flow - got).norm() < 1e-9);
        }
    }

    CHECK_THROWS_AS(synth_linear_step(hf, p0, 0.0, 0.0), Error);
    CHECK_THROWS_AS(synth_linear_step(hf, make_solution(inst), 1.0, 1.0), Error);
}

TEST_CASE("guarded arccos") {
    CHECK(guarded_acos(1.0 + 5e-13) == 0.0);
    CHECK_THROWS_AS(guarded_acos(1.0 + 1e-9), Error);
}
