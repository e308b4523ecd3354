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
#pragma once

#include <functional>

#include <Eigen/Dense>

namespace grover_ite {

using Objective = std::function<double(const Eigen::VectorXd&)>;

struct OptimizeResult {
    Eigen::VectorXd x;
    double value = 0.0;
    int evaluations = 0;
};

struct NelderMeadOptions {
    int max_evaluations = 20000;
    double initial_step = 0.1;
    double f_tol = 1e-15;
};

/// Downhill simplex. Non-finite objective values are treated as +inf.
OptimizeResult nelder_mead(const Objective& f, const Eigen::VectorXd& x0,
                           const NelderMeadOptions& opt = {});

struct BfgsOptions {
    int max_iterations = 3000;
    double grad_tol = 1e-11;
    double fd_step = 1e-6;
};

/// Quasi-Newton descent with central-difference gradients and an Armijo
/// backtracking line search.
OptimizeResult bfgs(const Objective& f, const Eigen::VectorXd& x0, const BfgsOptions& opt = {});

Eigen::VectorXd central_gradient(const Objective& f, const Eigen::VectorXd& x, double h,
                                 int* evaluations = nullptr);

}  // namespace grover_ite
