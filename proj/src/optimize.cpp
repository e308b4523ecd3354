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
#include "grover_ite/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

namespace grover_ite {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double safe(const Objective& f, const Eigen::VectorXd& x, int& count) {
    ++count;
    const double v = f(x);
    return std::isfinite(v) ? v : kInf;
}

}  // namespace

OptimizeResult nelder_mead(const Objective& f, const Eigen::VectorXd& x0,
                           const NelderMeadOptions& opt) {
    const Eigen::Index n = x0.size();
    int count = 0;
    std::vector<Eigen::VectorXd> pts(static_cast<std::size_t>(n + 1), x0);
    std::vector<double> vals(static_cast<std::size_t>(n + 1));
    for (Eigen::Index i = 0; i < n; ++i) pts[i + 1][i] += opt.initial_step;
    for (std::size_t i = 0; i < pts.size(); ++i) vals[i] = safe(f, pts[i], count);

    std::vector<std::size_t> order(pts.size());
    while (count < opt.max_evaluations) {
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return vals[a] < vals[b]; });
        const std::size_t best = order.front(), worst = order.back(), second = order[n - 1];
        if (std::abs(vals[worst] - vals[best]) <= opt.f_tol * (std::abs(vals[best]) + opt.f_tol)) {
            break;
        }

        Eigen::VectorXd centroid = Eigen::VectorXd::Zero(n);
        for (std::size_t i = 0; i < pts.size(); ++i) {
            if (i != worst) centroid += pts[i];
        }
        centroid /= static_cast<double>(n);

        const Eigen::VectorXd xr = centroid + (centroid - pts[worst]);
        const double fr = safe(f, xr, count);
        if (fr < vals[best]) {
            const Eigen::VectorXd xe = centroid + 2.0 * (centroid - pts[worst]);
            const double fe = safe(f, xe, count);
            if (fe < fr) {
                pts[worst] = xe, vals[worst] = fe;
            } else {
                pts[worst] = xr, vals[worst] = fr;
            }
            continue;
        }
        if (fr < vals[second]) {
            pts[worst] = xr, vals[worst] = fr;
            continue;
        }
        const bool outside = fr < vals[worst];
        const Eigen::VectorXd xc = outside ? Eigen::VectorXd(centroid + 0.5 * (xr - centroid))
                                           : Eigen::VectorXd(centroid + 0.5 * (pts[worst] - centroid));
        const double fc = safe(f, xc, count);
        if (fc < std::min(fr, vals[worst])) {
            pts[worst] = xc, vals[worst] = fc;
            continue;
        }
        for (std::size_t i = 0; i < pts.size(); ++i) {
            if (i == best) continue;
            pts[i] = pts[best] + 0.5 * (pts[i] - pts[best]);
            vals[i] = safe(f, pts[i], count);
        }
    }
    const auto it = std::min_element(vals.begin(), vals.end());
    const auto idx = static_cast<std::size_t>(it - vals.begin());
    return {pts[idx], vals[idx], count};
}

Eigen::VectorXd central_gradient(const Objective& f, const Eigen::VectorXd& x, double h,
                                 int* evaluations) {
    Eigen::VectorXd g(x.size());
    Eigen::VectorXd probe = x;
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        probe[i] = x[i] + h;
        const double up = f(probe);
        probe[i] = x[i] - h;
        const double down = f(probe);
        probe[i] = x[i];
        g[i] = (up - down) / (2.0 * h);
    }
    if (evaluations) *evaluations += static_cast<int>(2 * x.size());
    return g;
}

OptimizeResult bfgs(const Objective& f, const Eigen::VectorXd& x0, const BfgsOptions& opt) {
    const Eigen::Index n = x0.size();
    int count = 0;
    Eigen::VectorXd x = x0;
    double fx = safe(f, x, count);
    if (!std::isfinite(fx)) return {x, fx, count};
    Eigen::VectorXd g = central_gradient(f, x, opt.fd_step, &count);
    Eigen::MatrixXd hinv = Eigen::MatrixXd::Identity(n, n);

    for (int it = 0; it < opt.max_iterations; ++it) {
        if (!g.allFinite() || g.norm() <= opt.grad_tol) break;
        Eigen::VectorXd dir = -hinv * g;
        double slope = g.dot(dir);
        if (!(slope < 0.0)) {
            hinv.setIdentity();
            dir = -g;
            slope = -g.squaredNorm();
        }
        double step = 1.0;
        Eigen::VectorXd xn;
        double fn = kInf;
        for (int ls = 0; ls < 60; ++ls) {
            xn = x + step * dir;
            fn = safe(f, xn, count);
            if (fn <= fx + 1e-4 * step * slope) break;
            step *= 0.5;
        }
        if (!(fn < fx)) break;  // no progress possible at this resolution
        const Eigen::VectorXd gn = central_gradient(f, xn, opt.fd_step, &count);
        const Eigen::VectorXd sk = xn - x;
        const Eigen::VectorXd yk = gn - g;
        const double sy = sk.dot(yk);
        if (sy > 1e-300) {
            const double rho = 1.0 / sy;
            const Eigen::VectorXd hy = hinv * yk;
            hinv += (rho * rho * yk.dot(hy) + rho) * (sk * sk.transpose()) -
                    rho * (hy * sk.transpose() + sk * hy.transpose());
        }
        x = xn, fx = fn, g = gn;
    }
    return {x, fx, count};
}

}  // namespace grover_ite
