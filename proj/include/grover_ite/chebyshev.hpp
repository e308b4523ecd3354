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

#include <complex>
#include <functional>
#include <string_view>
#include <vector>

namespace grover_ite {

enum class Parity { Even, Odd, None };

std::string_view to_string(Parity p);
Parity parse_parity(std::string_view text);

/// Polynomial sum_k c_k T_k(x / half_width). The half width is 1 except for
/// the sign polynomials, which live on [-2, 2].
class ChebyshevPoly {
public:
    ChebyshevPoly() : ChebyshevPoly(std::vector<double>{0.0}, Parity::Even) {}
    /// Throws DomainError if the coefficients break the declared parity.
    ChebyshevPoly(std::vector<double> coeffs, Parity parity, double half_width = 1.0);

    /// Parity read off the zero pattern of the coefficients.
    static ChebyshevPoly detect(std::vector<double> coeffs, double half_width = 1.0);

    const std::vector<double>& coeffs() const noexcept { return coeffs_; }
    Parity parity() const noexcept { return parity_; }
    double half_width() const noexcept { return half_width_; }
    /// Index of the last nonzero coefficient (0 for the zero polynomial).
    int degree() const noexcept;

    double operator()(double x) const;
    std::complex<double> operator()(std::complex<double> x) const;

private:
    std::vector<double> coeffs_;
    Parity parity_;
    double half_width_;
};

/// Product of two Chebyshev series on the same domain.
std::vector<double> chebyshev_multiply(const std::vector<double>& a, const std::vector<double>& b);

/// Largest |p(x) - f(x)| over `points` equispaced samples of [lo, hi].
double grid_error(const ChebyshevPoly& p, const std::function<double(double)>& f,
                  double lo = -1.0, double hi = 1.0, int points = 2001);

enum class TrigKind { Cos, Sin };

/// J_m(s) for any real s.
double bessel_j(int m, double s);

/// Jacobi-Anger coefficients of cos(s x) or sin(s x) with `terms` Bessel
/// terms: cos uses T_0, T_2, ..., sin uses T_1, T_3, ...
std::vector<double> jacobi_anger_coefficients(TrigKind kind, double s, int terms);

/// Truncated Jacobi-Anger series with grid error <= eps on [-1, 1].
ChebyshevPoly jacobi_anger(TrigKind kind, double s, double eps);

/// Approximation of cos(s x sqrt(1 - x^2)) with grid error <= eps.
ChebyshevPoly target_ite_component(double s, double eps);

/// Odd polynomial on [-2, 2] with |p| <= 1 and |p(x) - sgn(x)| <= delta_cap
/// for eta <= |x| <= 2.
ChebyshevPoly sign_poly(double eta, double delta_cap);

}  // namespace grover_ite
