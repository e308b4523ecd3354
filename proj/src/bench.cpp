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
#include "grover_ite/bench.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <set>

#include <json.hpp>

#include "grover_ite/digest.hpp"
#include "grover_ite/io.hpp"
#include "grover_ite/ite_flow.hpp"
#include "grover_ite/numeric.hpp"

namespace grover_ite {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

const std::set<std::string, std::less<>> kExperiments{"fig-a", "fig-b", "fig-c", "fixed-point",
                                                      "custom"};
const std::set<std::string, std::less<>> kScheduleNames{
    "original-pi", "pi-over-three", "fixed-point-chebyshev", "sign-qsp", "ite-qsp", "gc-compiled"};

template <typename T>
std::vector<T> sorted_unique(std::vector<T> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

double quantile(std::vector<double> v, double q) {
    if (v.empty()) return 0.0;
    std::sort(v.begin(), v.end());
    const double pos = q * static_cast<double>(v.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const auto hi = std::min(lo + 1, v.size() - 1);
    return v[lo] + (pos - static_cast<double>(lo)) * (v[hi] - v[lo]);
}

void validate(const ExperimentConfig& c) {
    if (!kExperiments.contains(c.experiment)) {
        fail(ErrorCode::ConfigInvalid, "unknown experiment '" + c.experiment + "'");
    }
    if (c.iterations < 1) fail(ErrorCode::ConfigInvalid, "iterations must be >= 1");
    for (int n : c.n_qubits) {
        if (n < 1 || n > kMaxQubits) {
            fail(ErrorCode::ConfigInvalid, "n_qubits entry " + std::to_string(n) + " out of range");
        }
    }
    for (double s : c.s_values) {
        if (!(s >= 0.0) || !std::isfinite(s)) {
            fail(ErrorCode::ConfigInvalid, "s value " + format_double(s) + " must be finite and >= 0");
        }
    }
    if (!(c.delta2 > 0.0 && c.delta2 < 1.0)) fail(ErrorCode::ConfigInvalid, "delta2 must lie in (0, 1)");
    for (const auto& name : c.schedules) {
        if (!kScheduleNames.contains(name)) {
            fail(ErrorCode::ConfigInvalid, "unknown schedule '" + name + "'");
        }
    }
}

std::string fit_key(const std::vector<double>& target, int k, const FitOptions& o) {
    std::string key = "K=" + std::to_string(k) + ";seed=" + std::to_string(o.seed) +
                      ";l1=" + format_double(o.lambda1) + ";l2=" + format_double(o.lambda2) +
                      ";nd=" + std::to_string(o.n_d) + ";restarts=" + std::to_string(o.restarts) +
                      ";t=";
    for (double t : target) key += format_double(t) + ",";
    if (o.initial) {
        key += ";init=";
        for (double p : *o.initial) key += format_double(p) + ",";
    }
    return sha256_hex(key);
}


}  // namespace

ExperimentConfig default_config(std::string_view experiment) {
    ExperimentConfig c;
    c.experiment = std::string(experiment);
    if (experiment == "fig-a") {
        c.n_qubits = {8};
        c.iterations = 16;
        c.s_values = {0.5, 1.0, 3.0};
    } else if (experiment == "fig-b") {
        c.n_qubits = {4, 6, 8};
        c.iterations = 8;
        c.s_values = {1.0, 3.0, 4.0};
    } else if (experiment == "fig-c") {
        c.n_qubits = {6};
        c.iterations = 20;
        c.s_values = {0.25, 0.5, 1.0, 2.0, 3.0, 4.0, 5.0, 6.0};
    } else if (experiment == "fixed-point") {
        c.n_qubits = {8};
        c.iterations = 20;
        c.delta2 = 0.1;
        c.schedules = {"original-pi", "fixed-point-chebyshev", "sign-qsp"};
    } else if (experiment != "custom") {
        fail(ErrorCode::ConfigInvalid, "unknown experiment '" + std::string(experiment) + "'");
    }
    return c;
}

ExperimentConfig config_from_json(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        fail(ErrorCode::ConfigInvalid, std::string("malformed config: ") + e.what());
    }
    if (!j.is_object()) fail(ErrorCode::ConfigInvalid, "config must be a JSON object");
    static const std::set<std::string, std::less<>> kKeys{
        "experiment", "n_qubits", "iterations", "s_values", "delta2", "seed",
        "output",     "schedules", "marked_counts", "use_cache"};
    for (const auto& [key, value] : j.items()) {
        if (!kKeys.contains(key)) fail(ErrorCode::ConfigInvalid, "unknown config key '" + key + "'");
    }
    ExperimentConfig c = default_config(j.value("experiment", std::string("custom")));
    try {
        if (j.contains("n_qubits")) c.n_qubits = j["n_qubits"].get<std::vector<int>>();
        if (j.contains("iterations")) c.iterations = j["iterations"].get<int>();
        if (j.contains("s_values")) c.s_values = j["s_values"].get<std::vector<double>>();
        if (j.contains("delta2")) c.delta2 = j["delta2"].get<double>();
        if (j.contains("seed")) c.seed = j["seed"].get<std::uint64_t>();
        if (j.contains("output")) c.output = j["output"].get<std::string>();
        if (j.contains("schedules")) c.schedules = j["schedules"].get<std::vector<std::string>>();
        if (j.contains("marked_counts")) {
            c.marked_counts = j["marked_counts"].get<std::vector<std::int64_t>>();
        }
        if (j.contains("use_cache")) c.use_cache = j["use_cache"].get<bool>();
    } catch (const json::exception& e) {
        fail(ErrorCode::ConfigInvalid, std::string("bad config value: ") + e.what());
    }
    validate(c);
    return c;
}

std::string config_to_json(const ExperimentConfig& c) {
    std::string out = "{\"experiment\":\"" + c.experiment + "\",\"n_qubits\":[";
    for (std::size_t i = 0; i < c.n_qubits.size(); ++i) {
        out += (i ? "," : "") + std::to_string(c.n_qubits[i]);
    }
    out += "],\"iterations\":" + std::to_string(c.iterations) + ",\"s_values\":[";
    for (std::size_t i = 0; i < c.s_values.size(); ++i) {
        out += (i ? "," : "") + format_double(c.s_values[i]);
    }
    out += "],\"delta2\":" + format_double(c.delta2) + ",\"seed\":" + std::to_string(c.seed) +
           ",\"schedules\":[";
    for (std::size_t i = 0; i < c.schedules.size(); ++i) {
        out += (i ? ",\"" : "\"") + c.schedules[i] + "\"";
    }
    out += "],\"marked_counts\":[";
    for (std::size_t i = 0; i < c.marked_counts.size(); ++i) {
        out += (i ? "," : "") + std::to_string(c.marked_counts[i]);
    }
    return out + "]}";
}

std::string config_hash(const ExperimentConfig& config) {
    return sha256_hex(config_to_json(config)).substr(0, 16);
}

std::string csv_comment(const ExperimentConfig& config) {
    return std::string(kToolName) + " v" + std::string(kToolVersion) +
           " config=" + config_hash(config) + " seed=" + std::to_string(config.seed);
}

std::filesystem::path PhaseCache::default_directory() {
    if (const char* env = std::getenv("GROVER_ITE_CACHE_DIR"); env && *env) return env;
    if (const char* home = std::getenv("HOME"); home && *home) {
        return std::filesystem::path(home) / ".cache" / "grover-ite-lab";
    }
    return std::filesystem::temp_directory_path() / "grover-ite-lab";
}

QspPhases PhaseCache::fit(const Target& target, int k, const FitOptions& options) {
    std::vector<double> t;
    for (double x : fit_samples(options.n_d)) t.push_back(target(x));
    const std::string key = fit_key(t, k, options);
    if (auto it = memory_.find(key); it != memory_.end()) {
        ++hits_;
        return it->second;
    }
    const auto file = dir_ ? std::optional(*dir_ / (key + ".json")) : std::nullopt;
    if (file && std::filesystem::exists(*file)) {
        try {
            QspPhases p = phases_from_json(read_text_file(*file));
            if (p.k() == k) {
                ++hits_;
                return memory_[key] = p;
            }
        } catch (const Error&) {
            // unreadable entry: refit and overwrite
        }
    }
    ++misses_;
    QspPhases p = fit_phases(target, k, options).phases;
    if (file) {
        try {
            write_text_file(*file, phases_to_json(p));
        } catch (const Error& e) {
            std::cerr << "warning: phase cache not written: " << e.what() << '\n';
        }
    }
    return memory_[key] = p;
}

PhaseCache make_cache(const ExperimentConfig& config) {
    return config.use_cache ? PhaseCache(PhaseCache::default_directory()) : PhaseCache();
}

QspPhases ite_phases(int iterations, double s, std::uint64_t seed, PhaseCache& cache) {
    FitOptions opt;
    opt.seed = seed;
    opt.n_d = std::max(opt.n_d, 2 * iterations);
    opt.initial = group_commutator_phases(iterations, s);
    const Target target = [s](double x) {
        return std::cos(s * x * std::sqrt(std::max(0.0, 1.0 - x * x)));
    };
    return cache.fit(target, 2 * iterations, opt);
}

AngleSchedule ite_schedule(int iterations, double s, std::uint64_t seed, PhaseCache& cache) {
    AngleSchedule sched = from_grover(qsp_to_grover(ite_phases(iterations, s, seed, cache)));
    sched.s_target = s;
    return sched;
}

double ite_infidelity(const SearchInstance& inst, const AngleSchedule& schedule, double s) {
    const StateVector target = embed(inst, commutator_flow_state(inst, s).state);
    const RunResult run = run_schedule(inst, schedule, Mode::Full);
    return std::max(0.0, 1.0 - std::norm(inner(target, run.state)));
}

double auto_sign_eta(int iterations, double delta_cap) {
    const int k = 2 * iterations - 1;
    auto fits = [&](int i) { return sign_poly(i / 100.0, delta_cap).degree() <= k; };
    if (!fits(99)) {
        fail(ErrorCode::DegreeTooSmall, "no eta <= 0.99 gives a sign polynomial of degree <= " +
                                            std::to_string(k));
    }
    int lo = 0, hi = 99;  // fits(hi) holds; lo is below the grid or fails
    while (hi - lo > 1) {
        const int mid = (lo + hi) / 2;
        (fits(mid) ? hi : lo) = mid;
    }
    return hi / 100.0;
}

AngleSchedule sign_schedule(int iterations, double delta2, std::uint64_t seed, PhaseCache& cache) {
    const double delta_cap = delta2 / 2.0;
    const double eta = auto_sign_eta(iterations, delta_cap);
    const ChebyshevPoly p = sign_poly(eta, delta_cap);
    const int k = 2 * iterations - 1;
    FitOptions opt;
    opt.seed = seed;
    opt.n_d = std::max(opt.n_d, k);
    return schedule_from_sign_phases(cache.fit([&p](double x) { return p(x); }, k, opt));
}

std::int64_t valid_threshold(const std::vector<double>& overlaps, double target) {
    auto m0 = static_cast<std::int64_t>(overlaps.size()) + 1;
    for (auto m = static_cast<std::int64_t>(overlaps.size()); m >= 1; --m) {
        if (overlaps[m - 1] < target) break;
        m0 = m;
    }
    return m0;
}

CsvTable run_fig_a(const ExperimentConfig& config, PhaseCache& cache) {
    validate(config);
    CsvTable t({"s", "M", "E0", "infidelity"});
    for (int n : sorted_unique(config.n_qubits)) {
        const std::int64_t dim = std::int64_t{1} << n;
        for (double s : sorted_unique(config.s_values)) {
            const AngleSchedule sched = ite_schedule(config.iterations, s, config.seed, cache);
            for (std::int64_t m = 1; m < dim; ++m) {
                const auto inst = SearchInstance::with_prefix_marked(n, m);
                t.row().add(s).add(m).add(inst.e0()).add(ite_infidelity(inst, sched, s));
            }
        }
    }
    return t;
}

CsvTable run_fig_b(const ExperimentConfig& config, PhaseCache& cache) {
    validate(config);
    CsvTable t({"n", "s", "mean_infidelity"});
    for (int n : sorted_unique(config.n_qubits)) {
        const std::int64_t dim = std::int64_t{1} << n;
        for (double s : sorted_unique(config.s_values)) {
            const AngleSchedule sched = ite_schedule(config.iterations, s, config.seed, cache);
            double total = 0.0;
            for (std::int64_t m = 1; m < dim; ++m) {
                total += ite_infidelity(SearchInstance::with_prefix_marked(n, m), sched, s);
            }
            t.row().add(n).add(s).add(total / static_cast<double>(dim - 1));
        }
    }
    return t;
}

CsvTable run_fig_c(const ExperimentConfig& config, PhaseCache& cache) {
    validate(config);
    CsvTable t({"n", "s", "infidelity", "monotone_trend"});
    for (int n : sorted_unique(config.n_qubits)) {
        const std::int64_t dim = std::int64_t{1} << n;
        std::vector<std::pair<double, double>> curve;
        for (double s : sorted_unique(config.s_values)) {
            const AngleSchedule sched = ite_schedule(config.iterations, s, config.seed, cache);
            double total = 0.0;
            for (std::int64_t m = 1; m < dim; ++m) {
                total += ite_infidelity(SearchInstance::with_prefix_marked(n, m), sched, s);
            }
            curve.emplace_back(s, total / static_cast<double>(dim - 1));
        }
        // Trend flag: infidelity never decreases once s >= 1.
        bool monotone = true;
        double last = -1.0;
        for (const auto& [s, v] : curve) {
            if (s < 1.0) continue;
            if (v < last) monotone = false;
            last = v;
        }
        for (const auto& [s, v] : curve) t.row().add(n).add(s).add(v).add(monotone ? 1 : 0);
    }
    return t;
}

namespace {

AngleSchedule schedule_by_name(const std::string& name, const ExperimentConfig& config, double s,
                               PhaseCache& cache) {
    const int iters = config.iterations;
    if (name == "original-pi") return named_schedule({NamedKind::OriginalPi, iters});
    if (name == "pi-over-three") return named_schedule({NamedKind::PiOverThree, iters});
    if (name == "fixed-point-chebyshev") {
        return named_schedule({NamedKind::FixedPointChebyshev, iters, std::sqrt(config.delta2)});
    }
    if (name == "sign-qsp") return sign_schedule(iters, config.delta2, config.seed, cache);
    if (name == "ite-qsp") return ite_schedule(iters, s, config.seed, cache);
    if (name == "gc-compiled") {
        if (iters % 2 != 0) fail(ErrorCode::ConfigInvalid, "gc-compiled needs an even iteration count");
        AngleSchedule sched = compile(FormulaKind::group_commutator(), s, iters / 2);
        if (s > 0.0) sched.global_phase = iters * kPi;
        return sched;
    }
    fail(ErrorCode::ConfigInvalid, "unknown schedule '" + name + "'");
}

}  // namespace

CsvTable run_fixed_point(const ExperimentConfig& config, PhaseCache& cache) {
    validate(config);
    CsvTable t({"schedule", "M", "E0", "final_overlap"});
    for (int n : sorted_unique(config.n_qubits)) {
        const std::int64_t dim = std::int64_t{1} << n;
        for (const auto& name : config.schedules) {
            const AngleSchedule sched = schedule_by_name(name, config, 0.0, cache);
            for (std::int64_t m = 1; m < dim; ++m) {
                const auto inst = SearchInstance::with_prefix_marked(n, m);
                const RunResult run = run_schedule(inst, sched, Mode::Full);
                t.row().add(name).add(m).add(inst.e0()).add(run.trace.back());
            }
        }
    }
    return t;
}

CsvTable run_custom(const ExperimentConfig& config, PhaseCache& cache) {
    validate(config);
    CsvTable t({"schedule", "n", "iters", "s", "M", "E0", "success_probability", "ite_infidelity"});
    for (const auto& name : config.schedules) {
        for (int n : sorted_unique(config.n_qubits)) {
            const std::int64_t dim = std::int64_t{1} << n;
            std::vector<std::int64_t> ms = sorted_unique(config.marked_counts);
            if (ms.empty()) {
                for (std::int64_t m = 1; m < dim; ++m) ms.push_back(m);
            }
            for (double s : sorted_unique(config.s_values)) {
                const AngleSchedule sched = schedule_by_name(name, config, s, cache);
                for (std::int64_t m : ms) {
                    if (m < 1 || m >= dim) {
                        fail(ErrorCode::ConfigInvalid, "marked count " + std::to_string(m) +
                                                           " outside [1, N-1] for n=" +
                                                           std::to_string(n));
                    }
                    const auto inst = SearchInstance::with_prefix_marked(n, m);
                    const RunResult run = run_schedule(inst, sched, Mode::Full);
                    t.row()
                        .add(name)
                        .add(n)
                        .add(config.iterations)
                        .add(s)
                        .add(m)
                        .add(inst.e0())
                        .add(run.trace.back())
                        .add(ite_infidelity(inst, sched, s));
                }
            }
        }
    }
    return t;
}

CsvTable run_experiment(const ExperimentConfig& config, PhaseCache& cache) {
    validate(config);
    if (config.experiment == "fig-a") return run_fig_a(config, cache);
    if (config.experiment == "fig-b") return run_fig_b(config, cache);
    if (config.experiment == "fig-c") return run_fig_c(config, cache);
    if (config.experiment == "fixed-point") return run_fixed_point(config, cache);
    return run_custom(config, cache);
}

std::vector<std::string> contract_violations(const ExperimentConfig& config, const CsvTable& table) {
    std::vector<std::string> out;
    const auto& e = config.experiment;
    if (e == "fig-a") {
        std::map<double, std::vector<double>> by_s;
        for (std::size_t r = 0; r < table.size(); ++r) {
            by_s[table.number(r, "s")].push_back(table.number(r, "infidelity"));
        }
        for (const auto& [s, v] : by_s) {
            const double med = quantile(v, 0.5), p95 = quantile(v, 0.95);
            if (med > 1e-2) out.push_back("fig-a s=" + format_double(s) + " median " + format_double(med));
            if (p95 > 2e-2) out.push_back("fig-a s=" + format_double(s) + " p95 " + format_double(p95));
        }
    } else if (e == "fig-b") {
        std::map<double, std::vector<double>> by_s;
        for (std::size_t r = 0; r < table.size(); ++r) {
            by_s[table.number(r, "s")].push_back(table.number(r, "mean_infidelity"));
        }
        for (const auto& [s, v] : by_s) {
            const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
            if (*hi - *lo > 10.0 * *lo) out.push_back("fig-b s=" + format_double(s) + " spread too wide");
        }
    } else if (e == "fig-c") {
        double at_one = -1.0, at_max = -1.0, s_max = -1.0;
        for (std::size_t r = 0; r < table.size(); ++r) {
            const double s = table.number(r, "s"), v = table.number(r, "infidelity");
            if (s == 1.0) at_one = v;
            if (s > s_max) s_max = s, at_max = v;
        }
        if (at_one >= 0.0 && !(at_max > at_one)) out.push_back("fig-c: largest s not worse than s=1");
    } else if (e == "fixed-point") {
        std::map<std::string, std::vector<double>> by;
        for (std::size_t r = 0; r < table.size(); ++r) {
            by[table.rows()[r][table.column("schedule")]].push_back(table.number(r, "final_overlap"));
        }
        const double target = 1.0 - config.delta2;
        if (by.contains("fixed-point-chebyshev")) {
            const auto& cheb = by["fixed-point-chebyshev"];
            const std::int64_t m0 = valid_threshold(cheb, target);
            if (m0 > static_cast<std::int64_t>(cheb.size())) {
                out.push_back("fixed-point: chebyshev schedule has no valid E0 range");
            } else if (by.contains("sign-qsp")) {
                const auto& sign = by["sign-qsp"];
                std::size_t good = 0, total = 0;
                for (auto m = static_cast<std::size_t>(m0); m <= sign.size(); ++m, ++total) {
                    if (sign[m - 1] >= 0.85) ++good;
                }
                if (good < 0.9 * static_cast<double>(total)) {
                    out.push_back("fixed-point: sign-qsp >= 0.85 on only " + std::to_string(good) +
                                  "/" + std::to_string(total) + " valid points");
                }
            }
        }
        if (by.contains("original-pi")) {
            const auto& pi = by["original-pi"];
            if (std::none_of(pi.begin(), pi.end(), [](double v) { return v < 0.5; })) {
                out.push_back("fixed-point: original-pi never drops below 0.5");
            }
        }
    }
    return out;
}

}  // namespace grover_ite
