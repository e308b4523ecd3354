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
#include <cmath>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "grover_ite/bench.hpp"
#include "grover_ite/digest.hpp"
#include "grover_ite/geometry.hpp"
#include "grover_ite/io.hpp"
#include "grover_ite/ite_flow.hpp"

namespace {

using namespace grover_ite;

constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

int exit_code_for(ErrorCode code) {
    switch (code) {
    case ErrorCode::ConfigInvalid:
    case ErrorCode::IoError:
    case ErrorCode::InvalidInstance:
    case ErrorCode::EmptyMarkedSet:
    case ErrorCode::DegenerateInstance:
    case ErrorCode::DimensionTooLarge:
    case ErrorCode::DomainError:
    case ErrorCode::NegativeDuration:
    case ErrorCode::DepthExceeded:
    case ErrorCode::NonAlternatingSchedule:
        return kExitConfig;
    default:
        return kExitNumerical;
    }
}

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
    } else {
        write_text_file(out_path, text);
    }
}

struct BenchArgs {
    std::string experiment;
    std::vector<int> n;
    std::vector<std::int64_t> marked;
    std::optional<int> iters;
    std::vector<double> s;
    std::optional<double> delta2;
    std::optional<std::uint64_t> seed;
    std::string out;
    std::string json_config;
    std::vector<std::string> schedules;
    bool strict = false;
    bool no_cache = false;
};

int run_bench(const BenchArgs& a) {
    ExperimentConfig c;
    if (!a.json_config.empty()) {
        c = config_from_json(read_text_file(a.json_config));
        if (!a.experiment.empty() && a.experiment != c.experiment) {
            fail(ErrorCode::ConfigInvalid, "experiment '" + a.experiment +
                                               "' conflicts with config file '" + c.experiment + "'");
        }
    } else {
        c = default_config(a.experiment.empty() ? "custom" : a.experiment);
    }
    if (!a.n.empty()) c.n_qubits = a.n;
    if (!a.marked.empty()) c.marked_counts = a.marked;
    if (a.iters) c.iterations = *a.iters;
    if (!a.s.empty()) c.s_values = a.s;
    if (a.delta2) c.delta2 = *a.delta2;
    if (a.seed) c.seed = *a.seed;
    if (!a.out.empty()) c.output = a.out;
    if (!a.schedules.empty()) c.schedules = a.schedules;
    if (a.no_cache) c.use_cache = false;

    PhaseCache cache = make_cache(c);
    const CsvTable table = run_experiment(c, cache);
    emit(c.output, table.to_string(csv_comment(c)));
    if (a.strict) {
        const auto bad = contract_violations(c, table);
        for (const auto& msg : bad) std::cerr << "contract: " << msg << '\n';
        if (!bad.empty()) return kExitNumerical;
    }
    return 0;
}

struct SimulateArgs {
    int n = 2;
    std::vector<std::int64_t> marked{0};
    std::string schedule = "original-pi";
    std::string schedule_json;
    int iters = 1;
    double s = 0.0;
    double delta2 = 0.1;
    std::uint64_t seed = 0;
    std::string mode = "full";
    std::string out;
};

int run_simulate(const SimulateArgs& a) {
    const SearchInstance inst(a.n, a.marked);
    ExperimentConfig c = default_config("custom");
    c.n_qubits = {a.n};
    c.iterations = a.iters;
    c.s_values = {a.s};
    c.delta2 = a.delta2;
    c.seed = a.seed;
    c.marked_counts = a.marked;

    AngleSchedule sched;
    if (!a.schedule_json.empty()) {
        sched = schedule_from_json(read_text_file(a.schedule_json));
        c.schedules = {"json:" + sha256_hex(schedule_to_json(sched)).substr(0, 16)};
    } else {
        c.schedules = {a.schedule};
        PhaseCache cache = make_cache(c);
        if (a.schedule == "original-pi") {
            sched = named_schedule({NamedKind::OriginalPi, a.iters});
        } else if (a.schedule == "pi-over-three") {
            sched = named_schedule({NamedKind::PiOverThree, a.iters});
        } else if (a.schedule == "fixed-point-chebyshev") {
            sched = named_schedule({NamedKind::FixedPointChebyshev, a.iters, std::sqrt(a.delta2)});
        } else if (a.schedule == "sign-qsp") {
            sched = sign_schedule(a.iters, a.delta2, a.seed, cache);
        } else if (a.schedule == "ite-qsp") {
            sched = ite_schedule(a.iters, a.s, a.seed, cache);
        } else {
            fail(ErrorCode::ConfigInvalid, "unknown schedule '" + a.schedule + "'");
        }
    }
    if (a.mode != "full" && a.mode != "reduced") {
        fail(ErrorCode::ConfigInvalid, "mode must be full or reduced, got '" + a.mode + "'");
    }
    const RunResult run = run_schedule(inst, sched, a.mode == "full" ? Mode::Full : Mode::Reduced);
    CsvTable t({"step", "success_probability"});
    for (std::size_t i = 0; i < run.trace.size(); ++i) {
        t.row().add(static_cast<std::int64_t>(i)).add(run.trace[i]);
    }
    emit(a.out, t.to_string(csv_comment(c)));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Grover search as imaginary-time evolution: simulation, compilation and benchmarks"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kToolVersion));

    BenchArgs bench;
    auto* bench_cmd = app.add_subcommand("bench", "Run a benchmark sweep and write CSV");
    bench_cmd->add_option("experiment", bench.experiment, "fig-a | fig-b | fig-c | fixed-point | custom");
    bench_cmd->add_option("--n", bench.n, "Qubit counts");
    bench_cmd->add_option("--marked", bench.marked, "Marked-item counts M (custom sweeps)");
    bench_cmd->add_option("--iters", bench.iters, "Grover iterations");
    bench_cmd->add_option("--s", bench.s, "Flow durations");
    bench_cmd->add_option("--delta2", bench.delta2, "Target infidelity for fixed-point schedules");
    bench_cmd->add_option("--seed", bench.seed, "Seed for phase fitting");
    bench_cmd->add_option("--out", bench.out, "Output CSV path (stdout if omitted)");
    bench_cmd->add_option("--json-config", bench.json_config, "Experiment config file");
    bench_cmd->add_option("--schedule", bench.schedules, "Schedules (custom sweeps)");
    bench_cmd->add_flag("--strict", bench.strict, "Exit 3 when a numerical threshold is missed");
    bench_cmd->add_flag("--no-cache", bench.no_cache, "Do not read or write the phase cache");

    SimulateArgs sim;
    auto* sim_cmd = app.add_subcommand("simulate", "Run one schedule and print the success trace");
    sim_cmd->add_option("--n", sim.n, "Qubits")->capture_default_str();
    sim_cmd->add_option("--marked", sim.marked, "Marked basis indices")->capture_default_str();
    sim_cmd->add_option("--schedule", sim.schedule,
                        "original-pi | pi-over-three | fixed-point-chebyshev | sign-qsp | ite-qsp")
        ->capture_default_str();
    sim_cmd->add_option("--schedule-json", sim.schedule_json, "Schedule file instead of a name");
    sim_cmd->add_option("--iters", sim.iters, "Grover iterations")->capture_default_str();
    sim_cmd->add_option("--s", sim.s, "Flow duration (ite-qsp)");
    sim_cmd->add_option("--delta2", sim.delta2, "Target infidelity")->capture_default_str();
    sim_cmd->add_option("--seed", sim.seed, "Seed for phase fitting");
    sim_cmd->add_option("--mode", sim.mode, "full | reduced")->capture_default_str();
    sim_cmd->add_option("--out", sim.out, "Output CSV path");

    std::string formula = "gc", compile_out;
    double compile_s = 0.0;
    int fragments = 1;
    auto* compile_cmd = app.add_subcommand("compile", "Compile a product formula to a pulse schedule");
    compile_cmd->add_option("--formula", formula, "gc | third | two(..) | jk(..) | five(..)")
        ->capture_default_str();
    compile_cmd->add_option("--s", compile_s, "Flow duration")->required();
    compile_cmd->add_option("--fragments", fragments, "Number of fragments")->capture_default_str();
    compile_cmd->add_option("--out", compile_out, "Output JSON path");

    auto* qsp_cmd = app.add_subcommand("qsp", "Phase fitting, mapping and achievability checks");
    qsp_cmd->require_subcommand(1);

    std::string fit_target = "ite", fit_out, fit_poly;
    double fit_s = 1.0, fit_eta = 0.0, fit_delta2 = 0.1;
    int fit_iters = 16, fit_restarts = 8, fit_nd = 50;
    std::optional<int> fit_k;
    double lambda1 = 0.01, lambda2 = 0.1;
    std::uint64_t fit_seed = 0;
    auto* fit_cmd = qsp_cmd->add_subcommand("fit", "Fit QSP phases to a target");
    fit_cmd->add_option("--target", fit_target, "ite | sign | poly")->capture_default_str();
    fit_cmd->add_option("--poly-json", fit_poly, "Polynomial file for --target poly");
    fit_cmd->add_option("--s", fit_s, "Flow duration (ite)")->capture_default_str();
    fit_cmd->add_option("--iters", fit_iters, "Grover iterations; K = 2N (ite) or 2N-1 (sign)")
        ->capture_default_str();
    fit_cmd->add_option("--k", fit_k, "Number of signal operators (overrides --iters)");
    fit_cmd->add_option("--eta", fit_eta, "Sign threshold (0 picks the smallest that fits)");
    fit_cmd->add_option("--delta2", fit_delta2, "Target infidelity (sign)")->capture_default_str();
    fit_cmd->add_option("--lambda1", lambda1)->capture_default_str();
    fit_cmd->add_option("--lambda2", lambda2)->capture_default_str();
    fit_cmd->add_option("--nd", fit_nd, "Sample count")->capture_default_str();
    fit_cmd->add_option("--restarts", fit_restarts)->capture_default_str();
    fit_cmd->add_option("--seed", fit_seed);
    fit_cmd->add_option("--out", fit_out, "Output JSON path");

    std::string map_schedule, map_phases, map_out;
    auto* map_cmd = qsp_cmd->add_subcommand("map", "Convert between Grover schedules and QSP phases");
    map_cmd->add_option("--schedule-json", map_schedule, "Grover schedule to convert to phases");
    map_cmd->add_option("--phases-json", map_phases, "Phases to convert to a Grover schedule");
    map_cmd->add_option("--out", map_out, "Output JSON path");

    std::string check_poly, check_target = "poly", check_out;
    double check_s = 1.0, check_eps = 1e-8, check_tol = 1e-8;
    std::optional<int> check_k;
    bool check_strict = false;
    auto* check_cmd = qsp_cmd->add_subcommand("check", "Check the five achievability conditions");
    check_cmd->add_option("--poly-json", check_poly, "Polynomial file");
    check_cmd->add_option("--target", check_target, "poly | ite")->capture_default_str();
    check_cmd->add_option("--s", check_s, "Flow duration (ite)")->capture_default_str();
    check_cmd->add_option("--eps", check_eps, "Truncation error (ite)")->capture_default_str();
    check_cmd->add_option("--k", check_k, "K (defaults to the polynomial degree)");
    check_cmd->add_option("--tolerance", check_tol)->capture_default_str();
    check_cmd->add_flag("--strict", check_strict, "Exit 3 unless all conditions hold");
    check_cmd->add_option("--out", check_out, "Output JSON path");

    int geo_n = 2;
    std::vector<std::int64_t> geo_marked{0};
    double geo_eps = 1.0;
    auto* geo_cmd = app.add_subcommand("geodesic", "Geodesic quantities and the query bound");
    geo_cmd->add_option("--n", geo_n, "Qubits")->capture_default_str();
    geo_cmd->add_option("--marked", geo_marked, "Marked basis indices")->capture_default_str();
    geo_cmd->add_option("--eps", geo_eps, "Target accuracy for the query bound")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitConfig;
    }

    try {
        if (*bench_cmd) return run_bench(bench);
        if (*sim_cmd) return run_simulate(sim);
        if (*compile_cmd) {
            emit(compile_out, schedule_to_json(compile(FormulaKind::parse(formula), compile_s, fragments)) + "\n");
            return 0;
        }
        if (*fit_cmd) {
            FitOptions opt;
            opt.lambda1 = lambda1;
            opt.lambda2 = lambda2;
            opt.n_d = fit_nd;
            opt.seed = fit_seed;
            opt.restarts = fit_restarts;
            FitResult res;
            if (fit_target == "ite") {
                const int k = fit_k.value_or(2 * fit_iters);
                if (k % 2 == 0) opt.initial = group_commutator_phases(k / 2, fit_s);
                const double s = fit_s;
                res = fit_phases([s](double x) { return std::cos(s * x * std::sqrt(1.0 - x * x)); }, k, opt);
            } else if (fit_target == "sign") {
                const int k = fit_k.value_or(2 * fit_iters - 1);
                const double cap = fit_delta2 / 2.0;
                const double eta = fit_eta > 0.0 ? fit_eta : auto_sign_eta((k + 1) / 2, cap);
                const ChebyshevPoly p = sign_poly(eta, cap);
                if (p.degree() > k) fail(ErrorCode::DegreeTooSmall, "sign polynomial degree exceeds K");
                res = fit_phases(p, k, opt);
            } else if (fit_target == "poly") {
                const ChebyshevPoly p = poly_from_json(read_text_file(fit_poly));
                res = fit_phases(p, fit_k.value_or(p.degree()), opt);
            } else {
                fail(ErrorCode::ConfigInvalid, "unknown fit target '" + fit_target + "'");
            }
            std::cerr << "cost " << format_double(res.cost) << " mse " << format_double(res.mse)
                      << " imag " << format_double(res.imag_leakage) << " restart " << res.best_restart
                      << '\n';
            emit(fit_out, phases_to_json(res.phases) + "\n");
            return 0;
        }
        if (*map_cmd) {
            if (map_schedule.empty() == map_phases.empty()) {
                fail(ErrorCode::ConfigInvalid, "give exactly one of --schedule-json and --phases-json");
            }
            if (!map_schedule.empty()) {
                emit(map_out, phases_to_json(grover_to_qsp(schedule_from_json(read_text_file(map_schedule)))) + "\n");
            } else {
                emit(map_out, schedule_to_json(from_grover(qsp_to_grover(phases_from_json(read_text_file(map_phases))))) + "\n");
            }
            return 0;
        }
        if (*check_cmd) {
            ChebyshevPoly p;
            if (check_target == "ite") {
                p = target_ite_component(check_s, check_eps);
            } else if (check_target == "poly") {
                if (check_poly.empty()) fail(ErrorCode::ConfigInvalid, "--poly-json is required");
                p = poly_from_json(read_text_file(check_poly));
            } else {
                fail(ErrorCode::ConfigInvalid, "unknown check target '" + check_target + "'");
            }
            const auto rep = check_achievability(p, check_k.value_or(p.degree()), check_tol);
            emit(check_out, report_to_json(rep) + "\n");
            return check_strict && !rep.all() ? kExitNumerical : 0;
        }
        if (*geo_cmd) {
            const SearchInstance inst(geo_n, geo_marked);
            const double d = fs_distance(make_initial(inst), make_solution(inst));
            std::cout << "N " << inst.dim() << "\nM " << inst.num_marked() << "\nE0 "
                      << format_double(inst.e0()) << "\nV0 " << format_double(inst.v0())
                      << "\nd_fs " << format_double(d) << "\ns_star "
                      << format_double(optimal_duration(inst)) << "\nsu_length "
                      << format_double(su_geodesic_length(inst)) << "\nquery_bound "
                      << query_bound(geo_eps, d) << "\nquery_constant "
                      << format_double(kQueryConstant)
                      << "\n# query_bound is a sufficient count for even iteration numbers; add 1 for odd\n";
            return 0;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNumerical;
    }
    return 0;
}
