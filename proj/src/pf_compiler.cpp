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
#include "grover_ite/pf_compiler.hpp"

#include <cmath>
#include <numeric>

#include "grover_ite/geometry.hpp"
#include "grover_ite/ite_flow.hpp"
#include "grover_ite/operators.hpp"

namespace grover_ite {
namespace {

using Pulses = std::vector<Pulse>;

void append(Pulses& out, const Pulses& in) { out.insert(out.end(), in.begin(), in.end()); }

Pulses inverted(const Pulses& in) {
    Pulses out(in.rbegin(), in.rend());
    for (auto& p : out) p.angle = -p.angle;
    return out;
}

Pulse oracle_pulse(double a) { return {Generator::Oracle, a}; }
Pulse diffusion_pulse(double a) { return {Generator::Diffusion, a}; }

// Pulses of one fragment with step a, where the fragment approximates
// e^{a^2 [H_f, psi0]}.
Pulses formula_pulses(const FormulaKind& kind, double a) {
    using Tag = FormulaKind::Tag;
    switch (kind.tag()) {
    case Tag::GroupCommutator:
        return {oracle_pulse(-a), diffusion_pulse(-a), oracle_pulse(a), diffusion_pulse(a)};
    case Tag::ThirdOrder: {
        const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
        return {oracle_pulse(a),          diffusion_pulse((1.0 - phi) * a),
                oracle_pulse(-(phi + 1.0) * a), diffusion_pulse(-a),
                oracle_pulse(phi * a),    diffusion_pulse(phi * a)};
    }
    default: break;
    }

    const FormulaKind& base = *kind.base();
    const double n = base.claimed_order() - 1;
    Pulses out;
    switch (kind.tag()) {
    case Tag::TwoCopies:
        append(out, formula_pulses(base, -a / std::sqrt(2.0)));
        append(out, formula_pulses(base, a / std::sqrt(2.0)));
        break;
    case Tag::JeanKoseleff:
        if (static_cast<int>(n) % 2 == 0) {
            const double t = 1.0 / std::sqrt(2.0 + std::pow(2.0, 2.0 / (n + 1.0)));
            const double w = -std::pow(2.0, 1.0 / (n + 1.0)) * t;
            append(out, formula_pulses(base, t * a));
            append(out, formula_pulses(base, w * a));
            append(out, formula_pulses(base, t * a));
        } else {
            const double u = 1.0 / std::sqrt(2.0 - std::pow(2.0, 2.0 / (n + 1.0)));
            const double v = std::pow(2.0, 1.0 / (n + 1.0)) * u;
            append(out, formula_pulses(base, u * a));
            append(out, inverted(formula_pulses(base, v * a)));
            append(out, formula_pulses(base, u * a));
        }
        break;
    case Tag::FiveCopies: {
        const double q = std::pow(4.0, 2.0 / (n + 1.0));
        const double sigma = q / (4.0 * (4.0 - q));
        const double mu = std::sqrt(4.0 * sigma);
        const double nu = std::sqrt(0.25 + sigma);
        const Pulses outer = formula_pulses(base, nu * a);
        append(out, outer);
        append(out, outer);
        append(out, inverted(formula_pulses(base, mu * a)));
        append(out, outer);
        append(out, outer);
        break;
    }
    default: break;
    }
    return out;
}

void validate(const FormulaKind& kind) {
    if (kind.depth() > FormulaKind::kMaxDepth) {
        fail(ErrorCode::DepthExceeded, kind.name() + " nests deeper than " +
                                           std::to_string(FormulaKind::kMaxDepth));
    }
    for (const FormulaKind* k = &kind; k->base() != nullptr; k = k->base()) {
        // The two-copies symmetrization cancels the leading error only when the
        // base error term is odd in a, i.e. its order n = m - 1 is even.
        if (k->tag() == FormulaKind::Tag::TwoCopies && (k->base()->claimed_order() - 1) % 2 != 0) {
            fail(ErrorCode::DomainError, "two-copies needs a base of even order, got " +
                                             k->base()->name());
        }
    }
}

}  // namespace

AngleSchedule inverse(const AngleSchedule& schedule) {
    AngleSchedule out = schedule;
    out.pulses = inverted(schedule.pulses);
    out.global_phase = -schedule.global_phase;
    return out;
}

AngleSchedule canonicalize(const AngleSchedule& schedule) {
    AngleSchedule out = schedule;
    out.pulses.clear();
    for (const Pulse& p : schedule.pulses) {
        if (p.angle == 0.0) continue;
        if (!out.pulses.empty() && out.pulses.back().generator == p.generator) {
            out.pulses.back().angle += p.angle;
            if (out.pulses.back().angle == 0.0) out.pulses.pop_back();
        } else {
            out.pulses.push_back(p);
        }
    }
    return out;
}

AngleSchedule from_grover(const std::vector<GroverStep>& steps) {
    AngleSchedule out;
    out.pulses.reserve(2 * steps.size());
    for (const auto& st : steps) {
        out.pulses.push_back(oracle_pulse(st.beta));
        out.pulses.push_back(diffusion_pulse(st.alpha));
    }
    out.global_phase = static_cast<double>(steps.size()) * kPi;
    return out;
}

std::vector<GroverStep> to_grover(const AngleSchedule& schedule) {
    const auto& p = schedule.pulses;
    if (p.size() % 2 != 0) {
        fail(ErrorCode::NonAlternatingSchedule, "odd pulse count " + std::to_string(p.size()));
    }
    std::vector<GroverStep> steps;
    steps.reserve(p.size() / 2);
    for (std::size_t i = 0; i < p.size(); i += 2) {
        if (p[i].generator != Generator::Oracle || p[i + 1].generator != Generator::Diffusion) {
            fail(ErrorCode::NonAlternatingSchedule,
                 "pulse " + std::to_string(i) + " breaks the oracle/diffusion alternation");
        }
        steps.push_back({p[i + 1].angle, p[i].angle});
    }
    return steps;
}

int FormulaKind::depth() const noexcept { return base_ ? 1 + base_->depth() : 0; }

int FormulaKind::claimed_order() const noexcept {
    switch (tag_) {
    case Tag::GroupCommutator: return 3;
    case Tag::ThirdOrder: return 4;
    default: return base_->claimed_order() + 1;
    }
}

std::string FormulaKind::name() const {
    switch (tag_) {
    case Tag::GroupCommutator: return "gc";
    case Tag::ThirdOrder: return "third";
    case Tag::TwoCopies: return "two(" + base_->name() + ")";
    case Tag::JeanKoseleff: return "jk(" + base_->name() + ")";
    case Tag::FiveCopies: return "five(" + base_->name() + ")";
    }
    return "?";
}

FormulaKind FormulaKind::parse(std::string_view text) {
    if (text == "gc" || text == "group-commutator") return group_commutator();
    if (text == "third" || text == "third-order") return third_order();
    const auto open = text.find('(');
    if (open == std::string_view::npos || text.empty() || text.back() != ')') {
        fail(ErrorCode::ConfigInvalid, "unknown formula '" + std::string(text) + "'");
    }
    const auto head = text.substr(0, open);
    FormulaKind inner = parse(text.substr(open + 1, text.size() - open - 2));
    if (head == "two") return two_copies(std::move(inner));
    if (head == "jk") return jean_koseleff(std::move(inner));
    if (head == "five") return five_copies(std::move(inner));
    fail(ErrorCode::ConfigInvalid, "unknown formula '" + std::string(head) + "'");
}

AngleSchedule compile(const FormulaKind& kind, double s, int fragments) {
    if (!(s >= 0.0)) fail(ErrorCode::NegativeDuration, "s must be >= 0, got " + std::to_string(s));
    if (fragments < 1) fail(ErrorCode::DomainError, "fragments must be >= 1");
    validate(kind);
    const Pulses one = formula_pulses(kind, std::sqrt(s / fragments));
    AngleSchedule out;
    out.claimed_order = kind.claimed_order();
    out.s_target = s;
    out.pulses.reserve(one.size() * static_cast<std::size_t>(fragments));
    for (int f = 0; f < fragments; ++f) append(out.pulses, one);
    return canonicalize(out);
}

DenseOperator schedule_unitary(const SearchInstance& inst, const AngleSchedule& schedule) {
    require_dense(inst);
    DenseOperator u = DenseOperator::Identity(inst.dim(), inst.dim());
    for (const Pulse& p : schedule.pulses) {
        if (p.generator == Generator::Diffusion) {
            apply_diffusion(inst, p.angle, u);
        } else {
            apply_oracle(inst, p.angle, u);
        }
    }
    return u;
}

DenseOperator schedule_unitary_with_phase(const SearchInstance& inst,
                                          const AngleSchedule& schedule) {
    return std::polar(1.0, schedule.global_phase) * schedule_unitary(inst, schedule);
}

std::vector<ErrorPoint> measure_formula_error(const SearchInstance& inst, const FormulaKind& kind,
                                              const std::vector<double>& s_grid, int fragments) {
    if (inst.dim() > kMaxFormulaErrorDim) {
        fail(ErrorCode::DimensionTooLarge, "formula error sweeps are limited to N <= 512");
    }
    std::vector<ErrorPoint> out;
    out.reserve(s_grid.size());
    for (double s : s_grid) {
        const DenseOperator u = schedule_unitary(inst, compile(kind, s, fragments));
        out.emplace_back(s, operator_norm(u - exact_commutator_exponential(inst, s)));
    }
    return out;
}

double fit_order(const std::vector<ErrorPoint>& points) {
    std::vector<double> xs, ys;
    for (const auto& [s, err] : points) {
        if (s > 0.0 && err > 1e-14) {
            xs.push_back(std::log(s));
            ys.push_back(std::log(err));
        }
    }
    if (xs.size() < 4) {
        fail(ErrorCode::InsufficientData,
             "need >= 4 points with error > 1e-14, have " + std::to_string(xs.size()));
    }
    const double n = static_cast<double>(xs.size());
    const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
    const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxy += (xs[i] - mx) * (ys[i] - my);
        sxx += (xs[i] - mx) * (xs[i] - mx);
    }
    return sxy / sxx;
}

std::vector<double> default_order_grid() {
    std::vector<double> g(8);
    for (int i = 0; i < 8; ++i) g[i] = std::pow(10.0, -3.0 + 2.0 * i / 7.0);
    return g;
}

}  // namespace grover_ite
