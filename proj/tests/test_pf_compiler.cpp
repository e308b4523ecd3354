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

#include "grover_ite/geometry.hpp"
#include "grover_ite/io.hpp"
#include "grover_ite/ite_flow.hpp"
#include "grover_ite/numeric.hpp"
#include "grover_ite/pf_compiler.hpp"
#include "oracle.hpp"

using namespace grover_ite;

namespace {

double slope(const char* formula) {
    const auto inst = SearchInstance::with_prefix_marked(6, 1);
    return fit_order(measure_formula_error(inst, FormulaKind::parse(formula), default_order_grid()));
}

DenseOperator identity(std::int64_t n) { return DenseOperator::Identity(n, n); }

}  // namespace

TEST_CASE("group commutator pulses") {
    const auto sch = compile(FormulaKind::group_commutator(), 0.25);
    REQUIRE(sch.pulses.size() == 4);
    CHECK(sch.pulses[0] == Pulse{Generator::Oracle, -0.5});
    CHECK(sch.pulses[1] == Pulse{Generator::Diffusion, -0.5});
    CHECK(sch.pulses[2] == Pulse{Generator::Oracle, 0.5});
    CHECK(sch.pulses[3] == Pulse{Generator::Diffusion, 0.5});
    CHECK(sch.claimed_order == 3);
    CHECK(sch.s_target == 0.25);

    const auto inst = SearchInstance(3, {2});
    const DenseOperator hf = dense_marked_projector(inst), p0 = dense_initial_projector(inst);
    const Complex i(0, 1);
    const DenseOperator ref = oracle::expm(0.5 * i * p0) * oracle::expm(0.5 * i * hf) *
                              oracle::expm(-0.5 * i * p0) * oracle::expm(-0.5 * i * hf);
    CHECK((schedule_unitary(inst, sch) - ref).norm() < 1e-12);
}

TEST_CASE("grover pi schedule") {
    const auto inst = SearchInstance(4, {5, 11});
    const int iters = 3;
    const auto sch = from_grover(std::vector<GroverStep>(iters, GroverStep{kPi, kPi}));
    CHECK(sch.global_phase == doctest::Approx(iters * kPi));
    const DenseOperator hf = dense_marked_projector(inst), p0 = dense_initial_projector(inst);
    const DenseOperator id = identity(inst.dim());
    const DenseOperator g = (2.0 * p0 - id) * (id - 2.0 * hf);
    DenseOperator want = id;
    for (int k = 0; k < iters; ++k) want = g * want;
    CHECK((schedule_unitary_with_phase(inst, sch) - want).norm() < 1e-12);

    const auto steps = to_grover(sch);
    CHECK(steps.size() == static_cast<std::size_t>(iters));
    CHECK(steps[1] == GroverStep{kPi, kPi});
    AngleSchedule odd;
    odd.pulses = {{Generator::Oracle, 1.0}};
    CHECK_THROWS_AS(to_grover(odd), Error);
    odd.pulses = {{Generator::Diffusion, 1.0}, {Generator::Oracle, 1.0}};
    CHECK_THROWS_AS(to_grover(odd), Error);
}

TEST_CASE("inverse and canonical form") {
    const auto inst = SearchInstance(4, {0, 7, 9});
    for (const char* f : {"gc", "third", "jk(gc)", "five(third)", "two(gc)"}) {
        const auto sch = compile(FormulaKind::parse(f), 0.7, 3);
        const DenseOperator u = schedule_unitary(inst, sch);
        CHECK((schedule_unitary(inst, inverse(sch)) * u - identity(inst.dim())).norm() < 1e-11);
        AngleSchedule raw = sch;
        raw.pulses.insert(raw.pulses.begin() + 1, Pulse{raw.pulses[0].generator, 0.3});
        raw.pulses.insert(raw.pulses.begin() + 1, Pulse{Generator::Diffusion, 0.0});
        const auto canon = canonicalize(raw);
        CHECK((schedule_unitary(inst, canon) - schedule_unitary(inst, raw)).norm() < 1e-12);
        for (std::size_t k = 1; k < canon.pulses.size(); ++k) {
            CHECK(canon.pulses[k].generator != canon.pulses[k - 1].generator);
            CHECK(canon.pulses[k].angle != 0.0);
        }
    }
    AngleSchedule cancel;
    cancel.pulses = {{Generator::Oracle, 0.5}, {Generator::Oracle, -0.5}};
    CHECK(canonicalize(cancel).pulses.empty());
}

TEST_CASE("formula kinds") {
    CHECK(FormulaKind::parse("jk(five(gc))").name() == "jk(five(gc))");
    CHECK(FormulaKind::parse("jk(five(gc))").claimed_order() == 5);
    CHECK(FormulaKind::parse("two(gc)").claimed_order() == 4);
    CHECK(FormulaKind::parse("third").claimed_order() == 4);
    CHECK(FormulaKind::parse("gc").depth() == 0);
    CHECK_THROWS_AS(FormulaKind::parse("gcx"), Error);
    CHECK_THROWS_AS(FormulaKind::parse("six(gc)"), Error);
    CHECK_THROWS_AS(compile(FormulaKind::parse("two(third)"), 0.1), Error);
    CHECK_THROWS_AS(compile(FormulaKind::group_commutator(), -0.1), Error);
    CHECK_THROWS_AS(compile(FormulaKind::group_commutator(), 0.1, 0), Error);

    auto deep = FormulaKind::group_commutator();
    for (int d = 0; d < FormulaKind::kMaxDepth; ++d) deep = FormulaKind::jean_koseleff(deep);
    CHECK_NOTHROW(compile(deep, 0.01));
    try {
        compile(FormulaKind::jean_koseleff(deep), 0.01);
        FAIL("expected DepthExceeded");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DepthExceeded);
    }
}

TEST_CASE("observed orders") {
    CHECK(slope("gc") == doctest::Approx(1.5).epsilon(0.05));
    CHECK(slope("third") == doctest::Approx(2.0).epsilon(0.05));
    CHECK(slope("two(gc)") == doctest::Approx(2.0).epsilon(0.05));
    CHECK(slope("jk(gc)") == doctest::Approx(2.0).epsilon(0.05));
    CHECK(slope("five(gc)") == doctest::Approx(2.0).epsilon(0.05));
    CHECK(slope("jk(third)") == doctest::Approx(2.5).epsilon(0.05));
    CHECK(slope("five(third)") == doctest::Approx(2.5).epsilon(0.05));
}

TEST_CASE("order fit") {
    std::vector<ErrorPoint> pts;
    for (double s : default_order_grid()) pts.emplace_back(s, 3.0 * std::pow(s, 1.75));
    CHECK(fit_order(pts) == doctest::Approx(1.75).epsilon(1e-12));
    pts.emplace_back(0.5, 0.0);  // ignored
    CHECK(fit_order(pts) == doctest::Approx(1.75).epsilon(1e-12));
    pts.resize(3);
    CHECK_THROWS_AS(fit_order(pts), Error);
}

TEST_CASE("fragmentation") {
    const auto inst = SearchInstance::with_prefix_marked(5, 2);
    const auto gc = FormulaKind::group_commutator();
    for (double s : {0.5, 2.0}) {
        double last = 1e9;
        for (int f : {1, 2, 4, 8, 16}) {
            const double e = measure_formula_error(inst, gc, {s}, f)[0].second;
            CHECK(e < last);
            // F copies of error (s/F)^{3/2} each
            CHECK(e <= f * gci_error_bound(inst, s / f));
            last = e;
        }
        CHECK(compile(gc, s, 16).pulses.size() == 4 * 16);
    }
}

TEST_CASE("schedule json round trip") {
    auto sch = compile(FormulaKind::parse("jk(third)"), 0.37, 2);
    sch.global_phase = 1.25;
    const auto back = schedule_from_json(schedule_to_json(sch));
    CHECK(back.pulses == sch.pulses);
    CHECK(back.claimed_order == sch.claimed_order);
    CHECK(back.s_target == sch.s_target);
    CHECK(back.global_phase == sch.global_phase);
    CHECK_THROWS_AS(schedule_from_json("{\"pulses\": 3}"), Error);
}
