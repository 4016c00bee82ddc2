// Copyright 2026 The hyperell authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HYPERELL_ELLIPTIC_HPP
#define HYPERELL_ELLIPTIC_HPP

#include <cmath>
#include <limits>
#include <numbers>

#include "hyperell/errors.hpp"

namespace hyperell {

/// Elliptic modulus k in [0, 1) together with its complement k' = sqrt(1-k^2).
/// When k and k' are both known in closed form, the two-argument constructor
/// avoids the cancellation of recomputing the complement near k = 1.
class modulus {
public:
    explicit modulus(double k) : k_(k) {
        validate(k_);
        comp_ = std::sqrt((1.0 - k_) * (1.0 + k_));
    }

    modulus(double k, double complement) : k_(k), comp_(complement) {
        validate(k_);
        if (!(comp_ > 0.0) || !std::isfinite(comp_))
            throw domain_error("modulus: complement must be positive and finite");
        if (std::fabs(k_ * k_ + comp_ * comp_ - 1.0) > 64.0 * std::numeric_limits<double>::epsilon())
            throw domain_error("modulus: k^2 + k'^2 must equal 1");
    }

    double k() const noexcept { return k_; }
    double complement() const noexcept { return comp_; }

private:
    static void validate(double k) {
        if (!(k >= 0.0 && k < 1.0))
            throw domain_error("modulus: k must lie in [0, 1)");
    }
    double k_;
    double comp_;
};

/// Parameter pair a > b > 0.  Nearly equal pairs are rejected because the
/// downstream closed forms divide by sqrt(a - b).
struct param_pair {
    double a;
    double b;

    param_pair(double a_, double b_) : a(a_), b(b_) {
        if (!(std::isfinite(a) && std::isfinite(b)) || !(a > 0.0 && b > 0.0))
            throw domain_error("param_pair: a and b must be positive and finite");
        if (!(a > b)) throw domain_error("param_pair: need a > b");
        if ((a - b) / a < 1e-12)
            throw domain_error("param_pair: degenerate pair, (a - b)/a below 1e-12");
    }
};

/// Arithmetic-geometric mean of x, y > 0.
inline double agm(double x, double y) {
    if (!(x > 0.0 && y > 0.0) || !std::isfinite(x) || !std::isfinite(y))
        throw domain_error("agm: arguments must be positive and finite");
    const double eps = std::numeric_limits<double>::epsilon();
    for (int i = 0; i < 64; ++i) {
        if (std::fabs(x - y) <= 4.0 * eps * x) break;
        const double am = 0.5 * (x + y);
        y = std::sqrt(x * y);
        x = am;
    }
    return 0.5 * (x + y);
}

/// Complete elliptic integral of the first kind, K(k) = pi / (2 agm(1, k')).
/// The AGM converges quadratically; quadrature is kept only as a test oracle.
inline double complete_K(const modulus& m) {
    return std::numbers::pi / (2.0 * agm(1.0, m.complement()));
}

inline double complete_K(double k) { return complete_K(modulus(k)); }

/// The complementary modulus pair of a parameter pair together with the two
/// complete integrals: k+- = (sqrt a +- sqrt b) / sqrt(2(a+b)), which satisfy
/// k+^2 + k-^2 = 1 identically.
struct elliptic_pair {
    modulus k_plus;
    modulus k_minus;
    double K_plus;
    double K_minus;
};

inline elliptic_pair modulus_pair(const param_pair& p) {
    const double sa = std::sqrt(p.a);
    const double sb = std::sqrt(p.b);
    const double den = std::sqrt(2.0 * (p.a + p.b));
    const double kp = (sa + sb) / den;
    const double km = (sa - sb) / den;
    // each modulus is the other's complement, so K is computed without ever
    // forming sqrt(1 - k^2) near k = 1
    modulus plus(kp, km);
    modulus minus(km, kp);
    const double Kp = std::numbers::pi / (2.0 * agm(1.0, km));
    const double Km = std::numbers::pi / (2.0 * agm(1.0, kp));
    return {plus, minus, Kp, Km};
}

/// One descending Landen step: K(k) = factor * K(k_new) with
/// k_new = 2 sqrt(k) / (1 + k) and factor = 1 / (1 + k).
struct landen_step {
    modulus k_new;
    double factor;
};

inline landen_step landen_descend(const modulus& m) {
    const double k = m.k();
    if (k == 0.0) return {modulus(0.0), 1.0};
    const double k_new = 2.0 * std::sqrt(k) / (1.0 + k);
    // 1 - k_new^2 = ((1-k)/(1+k))^2 exactly; carrying the complement keeps
    // K(k_new) accurate as k_new approaches 1
    return {modulus(k_new, (1.0 - k) / (1.0 + k)), 1.0 / (1.0 + k)};
}

}  // namespace hyperell

#endif  // HYPERELL_ELLIPTIC_HPP
