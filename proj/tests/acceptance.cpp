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
// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits nonzero if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "grover_ite/bench.hpp"
#include "grover_ite/chebyshev.hpp"
#include "grover_ite/geometry.hpp"
#include "grover_ite/grover_engine.hpp"
#include "grover_ite/ite_flow.hpp"
#include "grover_ite/numeric.hpp"
#include "grover_ite/qsp.hpp"

using namespace grover_ite;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

std::vector<SearchInstance> instance_family() {
    std::vector<SearchInstance> out;
    for (int n = 2; n <= 8; ++n) {
        const std::int64_t dim = std::int64_t{1} << n;
        std::set<std::int64_t> ms{1, dim / 4, dim / 2, dim - 1};
        for (auto m : ms) out.push_back(SearchInstance::with_prefix_marked(n, m));
    }
    return out;
}

std::vector<SearchInstance> small_family() {
    std::vector<SearchInstance> out;
    for (int n : {2, 4, 6}) {
        const std::int64_t dim = std::int64_t{1} << n;
        std::set<std::int64_t> ms{1, dim / 4, dim / 2, dim - 1};
        for (auto m : ms) out.push_back(SearchInstance::with_prefix_marked(n, m));
    }
    return out;
}

double quantile(std::vector<double> v, double q) {
    std::sort(v.begin(), v.end());
    const double pos = q * static_cast<double>(v.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const auto hi = std::min(lo + 1, v.size() - 1);
    return v[lo] + (pos - static_cast<double>(lo)) * (v[hi] - v[lo]);
}

AngleSchedule random_schedule(std::mt19937_64& rng, int pulses) {
    std::uniform_real_distribution<double> u(-kPi, kPi);
    AngleSchedule s;
    for (int k = 0; k < pulses; ++k) {
        s.pulses.push_back({k % 2 == 0 ? Generator::Oracle : Generator::Diffusion, u(rng)});
    }
    return s;
}

Outcome criterion1() {
    double worst = 0.0;
    const auto fam = instance_family();
    for (const auto& inst : fam) {
        for (int i = 0; i < 40; ++i) {
            const double tau = 1e-3 * std::pow(3e4, i / 39.0);
            const StateVector a = ite_state(inst, tau);
            const StateVector b = embed(inst, commutator_flow_state(inst, duration_from_tau(inst, tau)).state);
            worst = std::max(worst, (a.amplitudes() - b.amplitudes()).norm());
        }
    }
    return {worst < 1e-10, std::to_string(fam.size()) + " instances x 40 tau, max error " + fmt("%.3e", worst)};
}

Outcome criterion2() {
    double worst = 0.0;
    for (const auto& inst : instance_family()) {
        const auto f = embed(inst, commutator_flow_state(inst, optimal_duration(inst)).state);
        worst = std::max(worst, std::abs(1.0 - std::norm(inner(f, make_solution(inst)))));
    }
    return {worst <= 1e-12, "max |1 - fidelity| " + fmt("%.3e", worst)};
}

Outcome criterion3() {
    std::mt19937_64 rng(2026);
    std::uniform_int_distribution<int> len(1, 12);
    std::uniform_real_distribution<double> ang(-kPi, kPi);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<GroverStep> steps(static_cast<std::size_t>(len(rng)));
        for (auto& st : steps) st = {ang(rng), ang(rng)};
        const QspPhases q = grover_to_qsp(steps);
        for (double e0 : {1.0 / 256, 0.3, 0.81}) {
            const double x = std::sqrt(e0);
            const Eigen::Matrix2cd g = reduced_grover_product(e0, steps);
            const Eigen::Matrix2cd m =
                std::polar(1.0, q.phases[0]) * qsp_matrix(q, x) * processing_operator(-q.phases[0]);
            worst = std::max(worst, (g - m).cwiseAbs().maxCoeff());
        }
    }
    return {worst < 1e-12, "100 schedules x 3 E0, max entry error " + fmt("%.3e", worst)};
}

Outcome criterion4() {
    double ratio = 0.0;
    int count = 0;
    for (const auto& inst : small_family()) {
        for (double s : {0.1, 0.5, 1.0, 2.0, kPi * kPi}) {
            ratio = std::max(ratio, measured_gci_error(inst, s) / gci_error_bound(inst, s));
            ++count;
        }
    }
    return {ratio <= 1.0, std::to_string(count) + " cases, max error/bound " + fmt("%.4f", ratio)};
}

Outcome criterion5() {
    const auto inst = SearchInstance::with_prefix_marked(6, 1);
    const auto grid = default_order_grid();
    const double gc = fit_order(measure_formula_error(inst, FormulaKind::group_commutator(), grid));
    const double third = fit_order(measure_formula_error(inst, FormulaKind::third_order(), grid));
    return {gc >= 1.25 && gc <= 1.75 && third >= gc + 0.4,
            "slopes gc " + fmt("%.3f", gc) + ", third " + fmt("%.3f", third)};
}

Outcome criterion6() {
    bool ok = query_bound(1.0, 0.0) == 51;
    const double raw = kQueryConstant / (kPi / 2.0);
    for (double eps : {1.0, 0.5, 0.25}) {
        ok = ok && query_bound(eps, 0.0) == static_cast<std::int64_t>(std::ceil(raw / (eps * eps)));
    }
    double worst = 0.0;  // largest q sqrt(E0) / envelope
    const auto q1 = static_cast<double>(query_bound(1.0, 0.0));
    for (double eps : {1.0, 0.5, 0.25}) {
        const double envelope = std::pow(2.0 * std::sqrt(2.0) * kPi, 2) / (eps * eps) + q1;
        for (int k = 1; k <= 12; ++k) {
            const double e0 = std::ldexp(1.0, -k);
            const double q = static_cast<double>(query_bound(eps, std::acos(std::sqrt(e0))));
            worst = std::max(worst, q * std::sqrt(e0) / envelope);
        }
    }
    ok = ok && worst < 1.0;
    return {ok, "query_bound(1, 0) = " + std::to_string(query_bound(1.0, 0.0)) +
                    ", max q sqrt(E0)/envelope " + fmt("%.4f", worst)};
}

Outcome criterion7(PhaseCache& cache) {
    const auto cfg = default_config("fig-a");
    const CsvTable t = run_fig_a(cfg, cache);
    std::map<double, std::vector<double>> by_s;
    for (std::size_t r = 0; r < t.size(); ++r) by_s[t.number(r, "s")].push_back(t.number(r, "infidelity"));
    bool ok = by_s.size() == 3;
    std::string detail;
    for (const auto& [s, v] : by_s) {
        const double med = quantile(v, 0.5), p95 = quantile(v, 0.95);
        ok = ok && med <= 1e-2 && p95 <= 2e-2;
        detail += "s=" + format_double(s) + " median " + fmt("%.2e", med) + " p95 " + fmt("%.2e", p95) + "; ";
    }
    return {ok, detail};
}

Outcome criterion8(PhaseCache& cache) {
    const CsvTable t = run_fig_b(default_config("fig-b"), cache);
    std::map<double, std::vector<double>> by_s;
    for (std::size_t r = 0; r < t.size(); ++r) {
        by_s[t.number(r, "s")].push_back(t.number(r, "mean_infidelity"));
    }
    bool ok = by_s.size() == 3;
    std::string detail;
    for (const auto& [s, v] : by_s) {
        const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
        ok = ok && (*hi - *lo) <= 10.0 * *lo;
        detail += "s=" + format_double(s) + " min " + fmt("%.2e", *lo) + " max " + fmt("%.2e", *hi) + "; ";
    }
    return {ok, detail};
}

Outcome criterion9(PhaseCache& cache) {
    const auto cfg = default_config("fixed-point");
    const CsvTable t = run_fixed_point(cfg, cache);
    std::map<std::string, std::vector<double>> by;
    for (std::size_t r = 0; r < t.size(); ++r) {
        by[t.rows()[r][t.column("schedule")]].push_back(t.number(r, "final_overlap"));
    }
    const auto& cheb = by["fixed-point-chebyshev"];
    const auto& pi = by["original-pi"];
    const auto& sign = by["sign-qsp"];
    const double target = 1.0 - cfg.delta2;
    const std::int64_t m0 = valid_threshold(cheb, target);
    const auto total = static_cast<std::int64_t>(cheb.size()) - m0 + 1;
    bool cheb_ok = total > 0;
    for (std::int64_t m = m0; m <= static_cast<std::int64_t>(cheb.size()); ++m) {
        cheb_ok = cheb_ok && cheb[m - 1] >= 0.9;
    }
    const bool overshoot = std::any_of(pi.begin(), pi.end(), [](double v) { return v < 0.5; });
    std::int64_t good = 0;
    for (std::int64_t m = m0; m <= static_cast<std::int64_t>(sign.size()); ++m) good += sign[m - 1] >= 0.85;
    const double frac = total > 0 ? static_cast<double>(good) / static_cast<double>(total) : 0.0;
    return {cheb_ok && overshoot && frac >= 0.9,
            "valid range M >= " + std::to_string(m0) + " (" + std::to_string(total) +
                " points), original-pi min " + fmt("%.3f", *std::min_element(pi.begin(), pi.end())) +
                ", sign-qsp >= 0.85 on " + fmt("%.1f", 100.0 * frac) + "%"};
}

Outcome criterion10() {
    const auto ja = jacobi_anger(TrigKind::Cos, 1.0, 1e-8);
    const double ja_err = grid_error(ja, [](double x) { return std::cos(x); });
    const auto p = sign_poly(0.1, 0.05);
    double worst_sign = 0.0, worst_abs = 0.0;
    for (int i = 0; i <= 40000; ++i) {
        const double x = -2.0 + i / 10000.0;
        const double v = p(x);
        worst_abs = std::max(worst_abs, std::abs(v));
        if (std::abs(x) >= 0.1) worst_sign = std::max(worst_sign, std::abs(v - (x > 0 ? 1.0 : -1.0)));
    }
    return {ja_err <= 1e-8 && worst_sign <= 0.05 && worst_abs <= 1.0,
            "jacobi-anger error " + fmt("%.2e", ja_err) + ", sign deviation " + fmt("%.4f", worst_sign) +
                ", max |p| " + fmt("%.6f", worst_abs) + ", degree " + std::to_string(p.degree())};
}

Outcome criterion11() {
    std::mt19937_64 rng(11);
    double norm_err = 0.0, mode_err = 0.0, inv_err = 0.0;
    for (int n : {3, 5, 7}) {
        for (std::int64_t m : {std::int64_t{1}, std::int64_t{3}}) {
            const auto inst = SearchInstance::with_prefix_marked(n, m);
            for (int trial = 0; trial < 10; ++trial) {
                const AngleSchedule s = random_schedule(rng, 2 + 2 * trial);
                const auto full = run_schedule(inst, s, Mode::Full);
                const auto red = run_schedule(inst, s, Mode::Reduced);
                norm_err = std::max(norm_err, std::abs(full.state.norm() - 1.0));
                mode_err = std::max(mode_err, (full.state.amplitudes() - red.state.amplitudes()).norm());
                const DenseOperator u = schedule_unitary(inst, inverse(s)) * schedule_unitary(inst, s);
                inv_err = std::max(inv_err, (u - DenseOperator::Identity(inst.dim(), inst.dim())).cwiseAbs().maxCoeff());
            }
        }
    }
    ExperimentConfig c = default_config("custom");
    c.n_qubits = {4};
    c.iterations = 4;
    c.s_values = {0.5};
    c.schedules = {"ite-qsp", "fixed-point-chebyshev"};
    c.seed = 17;
    c.use_cache = false;
    PhaseCache a, b;
    const bool same = run_custom(c, a).to_string(csv_comment(c)) == run_custom(c, b).to_string(csv_comment(c));
    return {norm_err <= 1e-12 && mode_err <= 1e-10 && inv_err <= 1e-12 && same,
            "norm drift " + fmt("%.2e", norm_err) + ", full vs reduced " + fmt("%.2e", mode_err) +
                ", inverse " + fmt("%.2e", inv_err) + ", csv " + (same ? "identical" : "DIFFERS")};
}

}  // namespace

int main() {
    PhaseCache cache(PhaseCache::default_directory());
    const std::vector<std::pair<int, std::function<Outcome()>>> criteria = {
        {1, criterion1},
        {2, criterion2},
        {3, criterion3},
        {4, criterion4},
        {5, criterion5},
        {6, criterion6},
        {7, [&] { return criterion7(cache); }},
        {8, [&] { return criterion8(cache); }},
        {9, [&] { return criterion9(cache); }},
        {10, criterion10},
        {11, criterion11},
    };
    int failures = 0;
    for (const auto& [id, run] : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s criterion %d: %s [%.2f s]\n", o.pass ? "PASS" : "FAIL", id, o.detail.c_str(), secs);
        std::fflush(stdout);
        failures += !o.pass;
    }
    std::printf("phase cache: %d hits, %d misses\n", cache.hits(), cache.misses());
    return failures == 0 ? 0 : 1;
}
