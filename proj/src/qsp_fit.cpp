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
#include "grover_ite/qsp_fit.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <random>
#include <string>

#include "grover_ite/numeric.hpp"
#include "grover_ite/optimize.hpp"

namespace grover_ite {
namespace {

struct Residuals {
    double mse = 0.0;
    double imag = 0.0;
    double rel = 0.0;
};

template <typename Phases>
Residuals residuals(const Phases& phases, Eigen::Index count, const std::vector<double>& xs,
                    const std::vector<double>& target) {
    std::vector<Complex> ph(static_cast<std::size_t>(count));
    for (Eigen::Index k = 0; k < count; ++k) ph[k] = std::polar(1.0, static_cast<double>(phases[k]));
    Residuals r;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double c = xs[i];
        const double s = std::sqrt(std::max(0.0, 1.0 - c * c));
        Complex v0 = ph[0], v1 = 0.0;
        for (Eigen::Index k = 1; k < count; ++k) {
            const Complex a = c * v0 + s * v1;
            const Complex b = s * v0 - c * v1;
            v0 = ph[k] * a;
            v1 = std::conj(ph[k]) * b;
        }
        const double d = target[i] - v0.real();
        const double rel = std::arg(v0 * std::conj(v1));
        r.mse += d * d;
        r.imag += v0.imag() * v0.imag();
        r.rel += rel * rel;
    }
    const double n = static_cast<double>(xs.size());
    r.mse /= n, r.imag /= n, r.rel /= n;
    return r;
}

}  // namespace

std::vector<double> fit_samples(int n_d) {
    std::vector<double> xs(static_cast<std::size_t>(n_d));
    for (int i = 0; i < n_d; ++i) xs[i] = (i + 0.5) / n_d;
    return xs;
}

double fit_cost(const std::vector<double>& phases, const std::vector<double>& xs,
                const std::vector<double>& target, double lambda1, double lambda2) {
    const Residuals r =
        residuals(phases, static_cast<Eigen::Index>(phases.size()), xs, target);
    return r.mse + lambda1 * r.imag + lambda2 * r.rel;
}

FitResult fit_phases(const Target& target, int k, const FitOptions& options) {
    if (k < 1) fail(ErrorCode::DomainError, "K must be >= 1");
    if (options.n_d < k) fail(ErrorCode::DomainError, "need n_d >= K");
    if (options.restarts < 1) fail(ErrorCode::DomainError, "need at least one restart");
    if (options.initial && static_cast<int>(options.initial->size()) != k + 1) {
        fail(ErrorCode::DomainError, "initial guess must hold K + 1 phases");
    }
    const std::vector<double> xs = fit_samples(options.n_d);
    std::vector<double> t(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) t[i] = target(xs[i]);

    const Eigen::Index dim = k + 1;
    const Objective cost = [&](const Eigen::VectorXd& p) {
        const Residuals r = residuals(p, dim, xs, t);
        return r.mse + options.lambda1 * r.imag + options.lambda2 * r.rel;
    };

    FitResult best;
    best.cost = std::numeric_limits<double>::infinity();
    for (int r = 0; r < options.restarts; ++r) {
        std::seed_seq seq{static_cast<std::uint32_t>(options.seed),
                          static_cast<std::uint32_t>(options.seed >> 32),
                          static_cast<std::uint32_t>(r)};
        std::mt19937_64 rng(seq);
        Eigen::VectorXd x0(dim);
        if (options.initial) {
            std::normal_distribution<double> jitter(0.0, 0.1);
            for (Eigen::Index i = 0; i < dim; ++i) {
                x0[i] = (*options.initial)[i] + (r == 0 ? 0.0 : jitter(rng));
            }
        } else {
            std::uniform_real_distribution<double> uni(-kPi, kPi);
            for (Eigen::Index i = 0; i < dim; ++i) x0[i] = uni(rng);
        }
        NelderMeadOptions nm;
        nm.max_evaluations = 400 * static_cast<int>(dim);
        const OptimizeResult coarse = nelder_mead(cost, x0, nm);
        const OptimizeResult fine = bfgs(cost, coarse.x);
        const OptimizeResult& pick = fine.value <= coarse.value ? fine : coarse;
        if (pick.value < best.cost) {
            best.cost = pick.value;
            best.best_restart = r;
            best.phases.phases.assign(pick.x.data(), pick.x.data() + dim);
        }
    }
    if (!std::isfinite(best.cost)) {
        fail(ErrorCode::OptimizerDiverged, "phase fit produced a non-finite cost");
    }
    best.phases.convention = Convention::R;
    const Residuals res = residuals(best.phases.phases, dim, xs, t);
    best.mse = res.mse;
    best.imag_leakage = res.imag;
    return best;
}

FitResult fit_phases(const ChebyshevPoly& target, int k, const FitOptions& options) {
    return fit_phases(Target([&target](double x) { return target(x); }), k, options);
}

std::vector<double> group_commutator_phases(int iterations, double s) {
    if (iterations < 1) fail(ErrorCode::DomainError, "iteration count must be >= 1");
    if (!(s >= 0.0)) fail(ErrorCode::NegativeDuration, "s must be >= 0");
    const int fragments = iterations / 2;
    std::vector<GroverStep> steps;
    if (fragments > 0) {
        const double a = std::sqrt(s / fragments);
        for (int f = 0; f < fragments; ++f) {
            steps.push_back({-a, -a});
            steps.push_back({a, a});
        }
    }
    steps.resize(static_cast<std::size_t>(iterations), GroverStep{});
    return grover_to_qsp(steps).phases;
}

AngleSchedule schedule_from_sign_phases(const QspPhases& phases) {
    const QspPhases r = phases.convention == Convention::R ? phases : convert_convention(phases);
    if (r.k() < 1 || r.k() % 2 != 1) {
        fail(ErrorCode::DomainError, "sign schedules need an odd number of signal operators");
    }
    QspPhases closed = r;
    closed.phases.push_back(0.0);  // alpha_N = 0
    return from_grover(qsp_to_grover(closed));
}

AngleSchedule fixed_point_via_sign(int iterations, double eta, double delta_cap,
                                   std::uint64_t seed, FitResult* fit) {
    if (iterations < 1) fail(ErrorCode::DomainError, "iteration count must be >= 1");
    const int k = 2 * iterations - 1;
    const ChebyshevPoly p = sign_poly(eta, delta_cap);
    if (p.degree() > k) {
        fail(ErrorCode::DegreeTooSmall, "sign polynomial degree " + std::to_string(p.degree()) +
                                            " exceeds 2N - 1 = " + std::to_string(k));
    }
    FitOptions opt;
    opt.seed = seed;
    opt.n_d = std::max(opt.n_d, k);
    FitResult res = fit_phases(p, k, opt);
    AngleSchedule out = schedule_from_sign_phases(res.phases);
    if (fit) *fit = std::move(res);
    return out;
}

}  // namespace grover_ite
