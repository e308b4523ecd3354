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
#include "grover_ite/grover_engine.hpp"

#include <cmath>
#include <string>

#include "grover_ite/numeric.hpp"
#include "grover_ite/operators.hpp"

namespace grover_ite {
namespace {

constexpr double kNormDriftLimit = 1e-10;

std::vector<GroverStep> constant_steps(int iterations, double angle) {
    return std::vector<GroverStep>(static_cast<std::size_t>(iterations), GroverStep{angle, angle});
}

void check_drift(double norm) {
    if (std::abs(norm - 1.0) > kNormDriftLimit) {
        fail(ErrorCode::NormDrift, "state norm drifted to " + std::to_string(norm));
    }
}

}  // namespace

AngleSchedule fixed_point_angles(int iterations, double delta) {
    if (iterations < 1) fail(ErrorCode::DomainError, "iteration count must be >= 1");
    if (!(delta > 0.0 && delta < 1.0)) {
        fail(ErrorCode::DomainError, "delta must lie in (0, 1), got " + std::to_string(delta));
    }
    const double l = 2.0 * iterations + 1.0;
    const double gamma = std::cosh(std::acosh(1.0 / delta) / l);
    const double root = std::sqrt(1.0 - 1.0 / (gamma * gamma));
    std::vector<GroverStep> steps(static_cast<std::size_t>(iterations));
    for (int k = 1; k <= iterations; ++k) {
        const double t = std::tan(2.0 * kPi * k / l) * root;
        steps[k - 1].alpha = -2.0 * std::atan2(1.0, t);  // acot with range (0, pi)
    }
    for (int k = 1; k <= iterations; ++k) steps[k - 1].beta = steps[iterations - k].alpha;
    return from_grover(steps);
}

AngleSchedule named_schedule(const NamedSchedule& named) {
    if (named.iterations < 1) fail(ErrorCode::DomainError, "iteration count must be >= 1");
    switch (named.kind) {
    case NamedKind::OriginalPi: return from_grover(constant_steps(named.iterations, kPi));
    case NamedKind::PiOverThree: return from_grover(constant_steps(named.iterations, kPi / 3.0));
    case NamedKind::FixedPointChebyshev: return fixed_point_angles(named.iterations, named.delta);
    }
    fail(ErrorCode::DomainError, "unknown named schedule");
}

StateVector diffusion(const SearchInstance& inst, double alpha, const StateVector& s) {
    Eigen::VectorXcd v = s.amplitudes();
    apply_diffusion(inst, alpha, v);
    return StateVector(std::move(v), s.is_normalized());
}

ReducedState diffusion(const SearchInstance&, double alpha, const ReducedState& r) {
    return ReducedState::from(reduced_diffusion(alpha) * r.vec());
}

StateVector oracle(const SearchInstance& inst, double beta, const StateVector& s) {
    Eigen::VectorXcd v = s.amplitudes();
    apply_oracle(inst, beta, v);
    return StateVector(std::move(v), s.is_normalized());
}

ReducedState oracle(const SearchInstance& inst, double beta, const ReducedState& r) {
    return ReducedState::from(reduced_oracle(inst, beta) * r.vec());
}

double success_probability(const SearchInstance& inst, const StateVector& s) {
    if (inst.num_marked() == 0) fail(ErrorCode::EmptyMarkedSet, "no marked items");
    Complex acc{0.0, 0.0};
    for (auto i : inst.marked()) acc += s[i];
    return std::min(1.0, std::norm(acc) / static_cast<double>(inst.num_marked()));
}

double success_probability(const SearchInstance& inst, const ReducedState& r) {
    inst.require_nondegenerate();
    const double x = std::sqrt(inst.e0());
    const double y = std::sqrt(1.0 - inst.e0());
    return std::min(1.0, std::norm(x * r.c0 + y * r.c1));
}

RunResult run_schedule(const SearchInstance& inst, const AngleSchedule& schedule, Mode mode) {
    const Complex phase = std::polar(1.0, schedule.global_phase);
    RunResult out;
    if (mode == Mode::Reduced) {
        inst.require_nondegenerate();
        const Eigen::Matrix2cd r = reflection(std::sqrt(inst.e0()));
        Eigen::Vector2cd v(1.0, 0.0);
        out.trace.push_back(success_probability(inst, ReducedState::from(v)));
        bool pending = false;
        for (const Pulse& p : schedule.pulses) {
            if (p.generator == Generator::Diffusion) {
                v[0] *= std::polar(1.0, p.angle);
            } else {
                v = r * (phase_gate(p.angle) * (r * v));
            }
            check_drift(v.norm());
            pending = p.generator == Generator::Oracle;
            if (!pending) out.trace.push_back(success_probability(inst, ReducedState::from(v)));
        }
        if (pending) out.trace.push_back(success_probability(inst, ReducedState::from(v)));
        out.state = embed(inst, ReducedState::from(phase * v));
        return out;
    }

    Eigen::VectorXcd v = make_initial(inst).amplitudes();
    auto prob = [&] { return success_probability(inst, StateVector(v)); };
    out.trace.push_back(prob());
    bool pending = false;
    for (const Pulse& p : schedule.pulses) {
        if (p.generator == Generator::Diffusion) {
            apply_diffusion(inst, p.angle, v);
        } else {
            apply_oracle(inst, p.angle, v);
        }
        check_drift(v.norm());
        pending = p.generator == Generator::Oracle;
        if (!pending) out.trace.push_back(prob());
    }
    if (pending) out.trace.push_back(prob());
    out.state = StateVector(phase * v);
    return out;
}

RunResult run_schedule(const SearchInstance& inst, const NamedSchedule& named, Mode mode) {
    return run_schedule(inst, named_schedule(named), mode);
}

}  // namespace grover_ite
