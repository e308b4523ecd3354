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
#include "grover_ite/qsp.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <string>

#include "grover_ite/numeric.hpp"
#include "grover_ite/operators.hpp"

namespace grover_ite {
namespace {

void check_x(double x) {
    if (!(std::abs(x) <= 1.0)) fail(ErrorCode::DomainError, "x must lie in [-1, 1]");
}

// Golden-section search for the maximum of f on [a, b].
std::pair<double, double> refine_max(const std::function<double(double)>& f, double a, double b) {
    const double g = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - g * (b - a), d = a + g * (b - a);
    double fc = f(c), fd = f(d);
    for (int it = 0; it < 60; ++it) {
        if (fc > fd) {
            b = d, d = c, fd = fc;
            c = b - g * (b - a), fc = f(c);
        } else {
            a = c, c = d, fc = fd;
            d = a + g * (b - a), fd = f(d);
        }
    }
    return fc > fd ? std::pair{c, fc} : std::pair{d, fd};
}

// Largest value of f on [lo, hi]: dense grid, then a local refinement
// around the best grid point.
std::pair<double, double> grid_max(const std::function<double(double)>& f, double lo, double hi,
                                   int points = 4001) {
    const double h = (hi - lo) / (points - 1);
    double best_x = lo, best = f(lo);
    for (int i = 1; i < points; ++i) {
        const double x = lo + h * i;
        const double v = f(x);
        if (v > best) best = v, best_x = x;
    }
    const auto [rx, rv] = refine_max(f, std::max(lo, best_x - h), std::min(hi, best_x + h));
    return rv > best ? std::pair{rx, rv} : std::pair{best_x, best};
}

}  // namespace

Eigen::Matrix2cd signal_operator(Convention convention, double x) {
    check_x(x);
    if (convention == Convention::R) return reflection(x);
    const double y = std::sqrt(1.0 - x * x);
    Eigen::Matrix2cd w;
    w << x, Complex(0.0, y), Complex(0.0, y), x;
    return w;
}

Eigen::Matrix2cd processing_operator(double phi) {
    Eigen::Matrix2cd s = Eigen::Matrix2cd::Zero();
    s(0, 0) = std::polar(1.0, phi);
    s(1, 1) = std::polar(1.0, -phi);
    return s;
}

Eigen::Matrix2cd qsp_matrix(const QspPhases& phases, double x) {
    if (phases.phases.empty()) fail(ErrorCode::DomainError, "empty phase list");
    const Eigen::Matrix2cd sig = signal_operator(phases.convention, x);
    Eigen::Matrix2cd m = processing_operator(phases.phases[0]);
    for (std::size_t k = 1; k < phases.phases.size(); ++k) {
        m = processing_operator(phases.phases[k]) * (sig * m);
    }
    return m;
}

Complex qsp_value(const QspPhases& phases, double x) { return qsp_state(phases, x)[0]; }

Eigen::Vector2cd qsp_state(const QspPhases& phases, double x) {
    if (phases.phases.empty()) fail(ErrorCode::DomainError, "empty phase list");
    const Eigen::Matrix2cd sig = signal_operator(phases.convention, x);
    Eigen::Vector2cd v(std::polar(1.0, phases.phases[0]), 0.0);
    for (std::size_t k = 1; k < phases.phases.size(); ++k) {
        v = sig * v;
        v[0] *= std::polar(1.0, phases.phases[k]);
        v[1] *= std::polar(1.0, -phases.phases[k]);
    }
    return v;
}

QspPhases convert_convention(const QspPhases& phases) {
    QspPhases out = phases;
    out.convention = phases.convention == Convention::W ? Convention::R : Convention::W;
    const int k = phases.k();
    if (k < 1) return out;
    // W -> R; R -> W uses the opposite shifts.
    const double dir = phases.convention == Convention::W ? 1.0 : -1.0;
    auto& p = out.phases;
    p[0] -= dir * kPi / 4.0;
    for (int i = 1; i < k; ++i) p[i] -= dir * kPi / 2.0;
    p[k] += dir * (2.0 * k - 1.0) * kPi / 4.0;
    return out;
}

QspPhases grover_to_qsp(const std::vector<GroverStep>& steps) {
    QspPhases out;
    out.convention = Convention::R;
    out.phases.assign(2 * steps.size() + 1, 0.0);
    double phi0 = static_cast<double>(steps.size()) * kPi;
    for (std::size_t l = 0; l < steps.size(); ++l) {
        out.phases[2 * l + 1] = steps[l].beta / 2.0;
        out.phases[2 * l + 2] = steps[l].alpha / 2.0;
        phi0 += (steps[l].alpha + steps[l].beta) / 2.0;
    }
    out.phases[0] = phi0;
    return out;
}

QspPhases grover_to_qsp(const AngleSchedule& schedule) { return grover_to_qsp(to_grover(schedule)); }

std::vector<GroverStep> qsp_to_grover(const QspPhases& phases) {
    const QspPhases r = phases.convention == Convention::R ? phases : convert_convention(phases);
    if (r.k() < 0 || r.k() % 2 != 0) {
        fail(ErrorCode::DomainError, "a Grover sequence needs an even number of signal operators");
    }
    std::vector<GroverStep> steps(static_cast<std::size_t>(r.k() / 2));
    for (std::size_t l = 0; l < steps.size(); ++l) {
        steps[l].beta = 2.0 * r.phases[2 * l + 1];
        steps[l].alpha = 2.0 * r.phases[2 * l + 2];
    }
    return steps;
}

Eigen::Matrix2cd reduced_grover_product(double e0, const std::vector<GroverStep>& steps) {
    const Eigen::Matrix2cd r = reflection(std::sqrt(e0));
    Eigen::Matrix2cd m = Eigen::Matrix2cd::Identity();
    for (const auto& st : steps) m = -(phase_gate(st.alpha) * (r * phase_gate(st.beta) * r)) * m;
    return m;
}

bool AchievabilityReport::all() const noexcept { return first(5); }

bool AchievabilityReport::first(int count) const noexcept {
    for (int i = 0; i < count; ++i) {
        if (!checks[i].satisfied) return false;
    }
    return true;
}

AchievabilityReport check_achievability(const ChebyshevPoly& poly, int k, double tolerance) {
    AchievabilityReport rep;
    for (int i = 0; i < 5; ++i) rep.checks[i].condition = i + 1;

    auto& deg = rep.checks[0];
    deg.margin = k - poly.degree();
    deg.satisfied = deg.margin >= 0;

    auto& par = rep.checks[1];
    const ChebyshevPoly probe = ChebyshevPoly::detect(poly.coeffs(), poly.half_width());
    const Parity want = k % 2 == 0 ? Parity::Even : Parity::Odd;
    par.satisfied = probe.parity() == want || (poly.degree() == 0 && poly.coeffs()[0] == 0.0);
    par.margin = par.satisfied ? 0.0 : -1.0;

    auto abs_p = [&](double x) { return std::abs(poly(x)); };
    auto& inside = rep.checks[2];
    const auto [xi, vi] = grid_max(abs_p, -1.0, 1.0);
    inside.witness_x = xi;
    inside.margin = 1.0 - vi;
    inside.satisfied = inside.margin >= -tolerance;

    auto& outside = rep.checks[3];
    auto neg_abs = [&](double x) { return -abs_p(x); };
    const auto [xr, vr] = grid_max(neg_abs, 1.0, 3.0);
    const auto [xl, vl] = grid_max(neg_abs, -3.0, -1.0);
    outside.witness_x = vr > vl ? xr : xl;
    outside.margin = -std::max(vr, vl) - 1.0;
    outside.satisfied = outside.margin >= -tolerance;

    auto& imag = rep.checks[4];
    if (k % 2 != 0) {
        imag.satisfied = true;
    } else {
        auto neg_sq = [&](double x) { return -std::norm(poly(Complex(0.0, x))); };
        const auto [xm, vm] = grid_max(neg_sq, -3.0, 3.0);
        imag.witness_x = xm;
        imag.margin = -vm - 1.0;
        imag.satisfied = imag.margin >= -tolerance;
    }
    return rep;
}

}  // namespace grover_ite
