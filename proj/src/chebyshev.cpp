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
#include "grover_ite/chebyshev.hpp"

#include <cmath>
#include <string>

#include "grover_ite/error.hpp"
#include "grover_ite/numeric.hpp"

namespace grover_ite {
namespace {

constexpr int kMaxTerms = 4096;

template <typename T>
T clenshaw(const std::vector<double>& c, T u) {
    T b1 = 0.0, b2 = 0.0;
    for (std::size_t k = c.size(); k-- > 1;) {
        const T b0 = c[k] + 2.0 * u * b1 - b2;
        b2 = b1;
        b1 = b0;
    }
    return c.empty() ? T(0.0) : c[0] + u * b1 - b2;
}

bool matches(const std::vector<double>& c, Parity p) {
    if (p == Parity::None) return true;
    const std::size_t skip = p == Parity::Even ? 1 : 0;
    for (std::size_t k = skip; k < c.size(); k += 2) {
        if (c[k] != 0.0) return false;
    }
    return true;
}

// Smallest n in [1, limit] with ok(n), assuming ok is monotone: doubling,
// then bisection.
template <typename Pred>
int smallest_passing(int limit, Pred ok, const char* what) {
    int hi = 1;
    while (!ok(hi)) {
        if (hi >= limit) fail(ErrorCode::DomainError, std::string(what) + ": degree limit reached");
        hi = std::min(2 * hi, limit);
    }
    int lo = hi / 2;  // fails, or 0
    while (hi - lo > 1) {
        const int mid = lo + (hi - lo) / 2;
        if (ok(mid)) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return hi;
}

void check_eps(double eps) {
    if (!(eps > 0.0 && eps < std::exp(-1.0))) {
        fail(ErrorCode::DomainError, "eps must lie in (0, 1/e), got " + std::to_string(eps));
    }
}

}  // namespace

std::string_view to_string(Parity p) {
    switch (p) {
    case Parity::Even: return "even";
    case Parity::Odd: return "odd";
    case Parity::None: return "none";
    }
    return "none";
}

Parity parse_parity(std::string_view text) {
    if (text == "even") return Parity::Even;
    if (text == "odd") return Parity::Odd;
    if (text == "none") return Parity::None;
    fail(ErrorCode::ConfigInvalid, "unknown parity '" + std::string(text) + "'");
}

ChebyshevPoly::ChebyshevPoly(std::vector<double> coeffs, Parity parity, double half_width)
    : coeffs_(std::move(coeffs)), parity_(parity), half_width_(half_width) {
    if (coeffs_.empty()) coeffs_.push_back(0.0);
    if (!(half_width_ > 0.0)) fail(ErrorCode::DomainError, "half width must be positive");
    if (!matches(coeffs_, parity_)) {
        fail(ErrorCode::DomainError,
             "coefficients do not have " + std::string(to_string(parity_)) + " parity");
    }
}

ChebyshevPoly ChebyshevPoly::detect(std::vector<double> coeffs, double half_width) {
    Parity p = Parity::None;
    if (matches(coeffs, Parity::Even)) {
        p = Parity::Even;
    } else if (matches(coeffs, Parity::Odd)) {
        p = Parity::Odd;
    }
    return ChebyshevPoly(std::move(coeffs), p, half_width);
}

int ChebyshevPoly::degree() const noexcept {
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        if (coeffs_[k] != 0.0) return static_cast<int>(k);
    }
    return 0;
}

double ChebyshevPoly::operator()(double x) const { return clenshaw(coeffs_, x / half_width_); }

std::complex<double> ChebyshevPoly::operator()(std::complex<double> x) const {
    return clenshaw(coeffs_, x / half_width_);
}

std::vector<double> chebyshev_multiply(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.empty() || b.empty()) return {};
    // T_i T_j = (T_{i+j} + T_{|i-j|}) / 2
    std::vector<double> out(a.size() + b.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0.0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0.0) continue;
            const double h = 0.5 * a[i] * b[j];
            out[i + j] += h;
            out[i > j ? i - j : j - i] += h;
        }
    }
    return out;
}

double grid_error(const ChebyshevPoly& p, const std::function<double(double)>& f, double lo,
                  double hi, int points) {
    double worst = 0.0;
    for (int i = 0; i < points; ++i) {
        const double x = lo + (hi - lo) * i / (points - 1);
        worst = std::max(worst, std::abs(p(x) - f(x)));
    }
    return worst;
}

double bessel_j(int m, double s) {
    const double v = std::cyl_bessel_j(static_cast<double>(m), std::abs(s));
    return (s < 0.0 && m % 2 != 0) ? -v : v;
}

std::vector<double> jacobi_anger_coefficients(TrigKind kind, double s, int terms) {
    // cos(sx) = J_0(s) + 2 sum_{l>=1} (-1)^l J_{2l}(s) T_{2l}(x)
    // sin(sx) = 2 sum_{l>=0} (-1)^l J_{2l+1}(s) T_{2l+1}(x)
    const bool is_cos = kind == TrigKind::Cos;
    std::vector<double> c(static_cast<std::size_t>(is_cos ? 2 * terms - 1 : 2 * terms), 0.0);
    for (int l = 0; l < terms; ++l) {
        const double sign = l % 2 == 0 ? 1.0 : -1.0;
        if (is_cos) {
            c[2 * l] = l == 0 ? bessel_j(0, s) : 2.0 * sign * bessel_j(2 * l, s);
        } else {
            c[2 * l + 1] = 2.0 * sign * bessel_j(2 * l + 1, s);
        }
    }
    return c;
}

ChebyshevPoly jacobi_anger(TrigKind kind, double s, double eps) {
    check_eps(eps);
    if (!std::isfinite(s)) fail(ErrorCode::DomainError, "s must be finite");
    const Parity parity = kind == TrigKind::Cos ? Parity::Even : Parity::Odd;
    auto exact = [kind, s](double x) { return kind == TrigKind::Cos ? std::cos(s * x) : std::sin(s * x); };
    auto build = [&](int terms) {
        return ChebyshevPoly(jacobi_anger_coefficients(kind, s, terms), parity);
    };
    const int terms = smallest_passing(
        kMaxTerms, [&](int t) { return grid_error(build(t), exact) <= eps; }, "jacobi_anger");
    return build(terms);
}

ChebyshevPoly target_ite_component(double s, double eps) {
    check_eps(eps);
    if (!(s >= 0.0) || !std::isfinite(s)) fail(ErrorCode::DomainError, "s must be finite and >= 0");
    // T_{2l}(x sqrt(1-x^2)) = T_l(z) with z = 2x^2(1-x^2) - 1 = -(3 + T_4(x)) / 4.
    const std::vector<double> z{-0.75, 0.0, 0.0, 0.0, -0.25};
    const std::vector<double> ja = jacobi_anger_coefficients(TrigKind::Cos, s, kMaxTerms / 4);
    auto build = [&](int terms) {
        std::vector<double> prev{1.0};
        std::vector<double> cur = z;
        std::vector<double> out(static_cast<std::size_t>(4 * (terms - 1) + 1), 0.0);
        out[0] = ja[0];
        for (int l = 1; l < terms; ++l) {
            for (std::size_t k = 0; k < cur.size(); ++k) out[k] += ja[2 * l] * cur[k];
            std::vector<double> next = chebyshev_multiply(z, cur);
            for (auto& v : next) v *= 2.0;
            for (std::size_t k = 0; k < prev.size(); ++k) next[k] -= prev[k];
            prev = std::move(cur);
            cur = std::move(next);
        }
        return ChebyshevPoly(std::move(out), Parity::Even);
    };
    auto exact = [s](double x) { return std::cos(s * x * std::sqrt(std::max(0.0, 1.0 - x * x))); };
    const int terms = smallest_passing(
        kMaxTerms / 4, [&](int t) { return grid_error(build(t), exact) <= eps; },
        "target_ite_component");
    return build(terms);
}

ChebyshevPoly sign_poly(double eta, double delta_cap) {
    if (!(eta > 0.0 && eta < 1.0)) fail(ErrorCode::DomainError, "eta must lie in (0, 1)");
    if (!(delta_cap > 0.0 && delta_cap < 0.5)) {
        fail(ErrorCode::DomainError, "delta_cap must lie in (0, 1/2)");
    }
    // Smoothed step erf(k x) with erf(k eta) = 1 - delta_cap / 4.
    const double goal = 1.0 - delta_cap / 4.0;
    double lo = 0.0, hi = 10.0;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        (std::erf(mid) < goal ? lo : hi) = mid;
    }
    const double k = hi / eta;

    // Chebyshev interpolation of erf(2 k u) on u in [-1, 1] (x = 2u).
    constexpr int kNodes = 8192;
    constexpr int kMaxDegree = kNodes / 2 - 1;
    std::vector<double> theta(kNodes), fval(kNodes);
    for (int i = 0; i < kNodes; ++i) {
        theta[i] = kPi * (i + 0.5) / kNodes;
        fval[i] = std::erf(2.0 * k * std::cos(theta[i]));
    }
    std::vector<double> coef;  // odd-index coefficients filled on demand
    auto ensure = [&](int degree) {
        while (static_cast<int>(coef.size()) <= degree) {
            const int j = static_cast<int>(coef.size());
            double c = 0.0;
            if (j % 2 == 1) {
                for (int i = 0; i < kNodes; ++i) c += fval[i] * std::cos(j * theta[i]);
                c *= 2.0 / kNodes;
            }
            coef.push_back(c);
        }
    };
    const double scale = 1.0 / (1.0 + delta_cap / 4.0);
    auto build = [&](int degree) {
        ensure(degree);
        std::vector<double> c(coef.begin(), coef.begin() + degree + 1);
        for (auto& v : c) v *= scale;
        return ChebyshevPoly(std::move(c), Parity::Odd, 2.0);
    };
    auto ok = [&](int half) {  // degree 2*half - 1
        const ChebyshevPoly p = build(2 * half - 1);
        constexpr int kGrid = 40001;
        for (int i = 0; i < kGrid; ++i) {
            const double x = -2.0 + 4.0 * i / (kGrid - 1);
            const double v = p(x);
            if (std::abs(v) > 1.0) return false;
            if (std::abs(x) >= eta && std::abs(v - (x > 0 ? 1.0 : -1.0)) > delta_cap) return false;
        }
        return true;
    };
    return build(2 * smallest_passing((kMaxDegree + 1) / 2, ok, "sign_poly") - 1);
}

}  // namespace grover_ite
