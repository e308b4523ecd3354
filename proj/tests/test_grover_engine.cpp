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

#include <algorithm>
#include <cmath>

#include "grover_ite/grover_engine.hpp"
#include "grover_ite/numeric.hpp"
#include "grover_ite/operators.hpp"
#include "oracle.hpp"

using namespace grover_ite;

namespace {

int optimal_iterations(double e0) {
    return static_cast<int>(std::floor(kPi / (4.0 * std::asin(std::sqrt(e0)))));
}

Eigen::MatrixXcd reduced_basis(const SearchInstance& inst) {
    Eigen::MatrixXcd b(inst.dim(), 2);
    b.col(0) = make_initial(inst).amplitudes();
    b.col(1) = make_perp(inst).amplitudes();
    return b;
}

}  // namespace

TEST_CASE("two qubit search is exact") {
    const SearchInstance inst(2, {2});
    const auto res = run_schedule(inst, NamedSchedule{NamedKind::OriginalPi, 1}, Mode::Full);
    REQUIRE(res.trace.size() == 2);
    CHECK(res.trace[0] == doctest::Approx(0.25));
    CHECK(res.trace[1] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(std::abs(res.state[2] - 1.0) < 1e-14);
}

TEST_CASE("original schedule follows sin^2") {
    for (int n : {3, 6, 8, 10}) {
        for (std::int64_t m : {std::int64_t{1}, std::int64_t{3}}) {
            const auto inst = SearchInstance::with_prefix_marked(n, m);
            const double theta = std::asin(std::sqrt(inst.e0()));
            const int kopt = optimal_iterations(inst.e0());
            const auto res = run_schedule(inst, NamedSchedule{NamedKind::OriginalPi, 3 * kopt + 2},
                                          Mode::Full);
            for (std::size_t k = 0; k < res.trace.size(); ++k) {
                const double want = std::pow(std::sin((2.0 * k + 1.0) * theta), 2);
                CHECK(std::abs(res.trace[k] - want) < 1e-10);
            }
            // Overshoot: more iterations make things worse.
            CHECK(res.trace[kopt] > res.trace[2 * kopt]);
        }
    }
}

TEST_CASE("pi over three is monotone") {
    const auto inst = SearchInstance::with_prefix_marked(6, 1);
    const auto res = run_schedule(inst, NamedSchedule{NamedKind::PiOverThree, 12}, Mode::Full);
    for (std::size_t k = 1; k < res.trace.size(); ++k) CHECK(res.trace[k] >= res.trace[k - 1] - 1e-14);
    // One step maps failure probability f to f^3.
    const auto one = run_schedule(inst, NamedSchedule{NamedKind::PiOverThree, 1}, Mode::Reduced);
    CHECK(1.0 - one.trace[1] == doctest::Approx(std::pow(1.0 - inst.e0(), 3)).epsilon(1e-12));
}

TEST_CASE("fixed point angles") {
    const int iters = 20;
    const double delta = std::sqrt(0.1);
    const auto sch = fixed_point_angles(iters, delta);
    const auto steps = to_grover(sch);
    REQUIRE(steps.size() == static_cast<std::size_t>(iters));
    for (int k = 0; k < iters; ++k) {
        CHECK(steps[k].beta == steps[iters - 1 - k].alpha);
        CHECK(steps[k].alpha < 0.0);
        CHECK(steps[k].alpha > -2.0 * kPi);
    }
    // Closed form: 1 - delta^2 T_L(gamma sqrt(1 - lambda))^2.
    const double l = 2.0 * iters + 1.0;
    const double gamma = std::cosh(std::acosh(1.0 / delta) / l);
    int below = 0;
    for (std::int64_t m = 1; m < 256; ++m) {
        const auto inst = SearchInstance::with_prefix_marked(8, m);
        const auto res = run_schedule(inst, sch, Mode::Reduced);
        const double arg = gamma * std::sqrt(1.0 - inst.e0());
        const double tl = arg <= 1.0 ? std::cos(l * std::acos(arg)) : std::cosh(l * std::acosh(arg));
        CHECK(res.trace.back() == doctest::Approx(1.0 - delta * delta * tl * tl).epsilon(1e-9));
        if (arg <= 1.0 && res.trace.back() < 0.9 - 1e-9) ++below;
    }
    CHECK(below == 0);
    CHECK_THROWS_AS(fixed_point_angles(0, 0.3), Error);
    CHECK_THROWS_AS(fixed_point_angles(4, 1.0), Error);
}

TEST_CASE("full and reduced modes agree") {
    const std::vector<AngleSchedule> schedules = {
        named_schedule({NamedKind::OriginalPi, 5}),
        named_schedule({NamedKind::PiOverThree, 4}),
        named_schedule({NamedKind::FixedPointChebyshev, 6, 0.4}),
        compile(FormulaKind::parse("jk(gc)"), 0.8, 2),
    };
    for (int n : {2, 5, 9}) {
        for (std::int64_t m : {std::int64_t{1}, std::int64_t{2}, (std::int64_t{1} << n) - 1}) {
            const auto inst = SearchInstance::with_prefix_marked(n, m);
            for (const auto& sch : schedules) {
                const auto full = run_schedule(inst, sch, Mode::Full);
                const auto red = run_schedule(inst, sch, Mode::Reduced);
                CHECK((full.state.amplitudes() - red.state.amplitudes()).norm() < 1e-10);
                REQUIRE(full.trace.size() == red.trace.size());
                for (std::size_t k = 0; k < full.trace.size(); ++k) {
                    CHECK(std::abs(full.trace[k] - red.trace[k]) < 1e-10);
                }
                if (inst.dim() <= 64) {
                    const Eigen::VectorXcd dense =
                        schedule_unitary_with_phase(inst, sch) * make_initial(inst).amplitudes();
                    CHECK((dense - full.state.amplitudes()).norm() < 1e-10);
                }
            }
        }
    }
}

TEST_CASE("reduced operators are compressions") {
    for (int n : {2, 4, 6}) {
        for (std::int64_t m : {std::int64_t{1}, std::int64_t{5} % (std::int64_t{1} << n)}) {
            if (m == 0) continue;
            const auto inst = SearchInstance::with_prefix_marked(n, m);
            const Eigen::MatrixXcd b = reduced_basis(inst);
            const DenseOperator hf = dense_marked_projector(inst);
            const DenseOperator p0 = dense_initial_projector(inst);
            for (double a : {0.3, kPi, -1.1}) {
                const DenseOperator o = oracle::expm(Complex(0, a) * hf);
                const DenseOperator d = oracle::expm(Complex(0, a) * p0);
                CHECK((b.adjoint() * o * b - reduced_oracle(inst, a)).norm() < 1e-12);
                CHECK((b.adjoint() * d * b - reduced_diffusion(a)).norm() < 1e-12);
                // the subspace is invariant
                CHECK((o * b - b * (b.adjoint() * o * b)).norm() < 1e-12);
            }
        }
    }
}

TEST_CASE("success probability") {
    const SearchInstance inst(3, {1, 4});
    CHECK(success_probability(inst, make_initial(inst)) == doctest::Approx(0.25));
    CHECK(success_probability(inst, make_solution(inst)) == doctest::Approx(1.0));
    CHECK(success_probability(inst, ReducedState{}) == doctest::Approx(0.25));
    CHECK_THROWS_AS(success_probability(SearchInstance(3, {}), make_initial(inst)), Error);
    CHECK_THROWS_AS(run_schedule(SearchInstance(2, {0, 1, 2, 3}), named_schedule({NamedKind::OriginalPi, 1}),
                                 Mode::Reduced),
                    Error);
}

TEST_CASE("trace length follows diffusion pulses") {
    const SearchInstance inst(4, {1});
    AngleSchedule sch;
    sch.pulses = {{Generator::Oracle, 1.0}, {Generator::Diffusion, 1.0}, {Generator::Oracle, 0.5}};
    CHECK(run_schedule(inst, sch, Mode::Full).trace.size() == 3);
    sch.pulses.pop_back();
    CHECK(run_schedule(inst, sch, Mode::Full).trace.size() == 2);
}
