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

#ifndef HYPERELL_HYPERELLIPTIC_HPP
#define HYPERELL_HYPERELLIPTIC_HPP

#include <cmath>

#include "hyperell/elliptic.hpp"
#include "hyperell/errors.hpp"
#include "hyperell/gamma.hpp"
#include "hyperell/quadrature.hpp"

namespace hyperell {

namespace detail {

inline void check_index(int index) {
    if (index < 1 || index > 6) throw domain_error("integral index must be 1..6");
}

}  // namespace detail

/// Direct quadrature of the six hyperelliptic integrals
///   I1 = int_0^inf dp / sqrt(p (p^2+a^2)(p^2+b^2))
///   I2 = int_0^inf sqrt(p / ((p^2+a^2)(p^2+b^2))) dp
///   I3 = int_a^inf dp / sqrt(p (p^2-a^2)(p^2-b^2))
///   I4 = int_a^inf sqrt(p / ((p^2-a^2)(p^2-b^2))) dp
///   I5 = int_0^b  dp / sqrt(p (p^2-a^2)(p^2-b^2))
///   I6 = int_0^b  sqrt(p / ((p^2-a^2)(p^2-b^2))) dp
/// On [0, b] the two quadratic factors are both negative, so the product
/// under the radical is positive as written.  Singular points sit at the
/// domain endpoints (p = 0, a, b) and are evaluated through the exact
/// endpoint distance the engine provides.
inline quad_result<double> hyperelliptic_direct_result(int index, const param_pair& p,
                                                       double tol = 1e-10) {
    detail::check_index(index);
    const double a = p.a, b = p.b;
    switch (index) {
        case 1:
            return integrate_to_inf(
                [=](double x) { return 1.0 / std::sqrt(x * (x * x + a * a) * (x * x + b * b)); },
                0.0, tol, std::sqrt(a * b));
        case 2:
            return integrate_to_inf(
                [=](double x) { return std::sqrt(x / ((x * x + a * a) * (x * x + b * b))); },
                0.0, tol, std::sqrt(a * b));
        case 3:
            return integrate_to_inf(
                [=](double x, double dist) {
                    return 1.0 / std::sqrt(x * dist * (x + a) * (x * x - b * b));
                },
                a, tol, a);
        case 4:
            return integrate_to_inf(
                [=](double x, double dist) {
                    return std::sqrt(x / (dist * (x + a) * (x * x - b * b)));
                },
                a, tol, a);
        case 5:
            return integrate(
                [=](double x, double dist) {
                    const double bm = x > 0.5 * b ? dist : b - x;
                    return 1.0 / std::sqrt(x * (a - x) * (a + x) * bm * (b + x));
                },
                0.0, b, tol);
        default:
            return integrate(
                [=](double x, double dist) {
                    const double bm = x > 0.5 * b ? dist : b - x;
                    return std::sqrt(x / ((a - x) * (a + x) * bm * (b + x)));
                },
                0.0, b, tol);
    }
}

inline double hyperelliptic_direct(int index, const param_pair& p, double tol = 1e-10) {
    return hyperelliptic_direct_result(index, p, tol).value;
}

/// The historical showcase: the constant X = int_0^1 x^2 / sqrt(1 - x^12) dx
/// computed five independent ways, the two modular identities it implies,
/// and the two tail identities tying int_0^inf integrands of 1/sqrt(1+z^12)
/// to I3 and I4 at (a, b) = (2, sqrt 3).
struct legendre_values {
    double x_direct;         // int_0^1 x^2 / sqrt(1 - x^12) dx
    double x_elliptic;       // K(1/sqrt 2) / (3 sqrt 2)
    double x_quartic;        // (1/3) int_0^1 du / sqrt(1 - u^4)
    double x_hyper;          // (1/2) int_0^inf dp / sqrt(p (p^2+3)(p^2+4))
    double x_gamma;          // Gamma(1/4)^2 / (12 sqrt(2 pi))
    double p192_lhs;         // K((sqrt2 - 3^(1/4)) / (1 + sqrt3))
    double p192_rhs;         // sqrt2 / (27^(1/4) (sqrt3 - 1)) K(1/sqrt2)
    double p192b_lhs;        // K((sqrt2 + 3^(1/4)) / (1 + sqrt3))
    double p192b_rhs;        // sqrt(3 + 2 sqrt3) K(1/sqrt2)
    double z12_even_lhs;     // int_0^inf z^2 / sqrt(1 + z^12) dz
    double z12_even_rhs;     // int_2^inf dp / sqrt(p (p^2-3)(p^2-4))
    double z12_quartic_lhs;  // int_0^inf (1 + z^4) / sqrt(1 + z^12) dz
    double z12_quartic_rhs;  // int_2^inf sqrt(p / ((p^2-3)(p^2-4))) dp
};

inline legendre_values legendre_showcase(double tol = 1e-12) {
    using std::numbers::pi;
    legendre_values v{};

    // 1 - x^12 = (1 - x)(1 + x + ... + x^11) keeps the endpoint factor exact
    v.x_direct = integrate(
                     [](double x, double dist) {
                         const double omx = x > 0.5 ? dist : 1.0 - x;
                         double s = 0.0, xp = 1.0;
                         for (int j = 0; j < 12; ++j) { s += xp; xp *= x; }
                         return x * x / std::sqrt(omx * s);
                     },
                     0.0, 1.0, tol)
                     .value;

    const double s2 = std::sqrt(2.0), s3 = std::sqrt(3.0);
    const double q3 = std::sqrt(s3);  // 3^(1/4)
    v.x_elliptic = complete_K(modulus(1.0 / s2)) / (3.0 * s2);

    v.x_quartic = integrate(
                      [](double u, double dist) {
                          const double c = u > 0.5 ? dist : 1.0 - u;
                          return 1.0 / std::sqrt(c * (1.0 + u) * (1.0 + u * u));
                      },
                      0.0, 1.0, tol)
                      .value /
                  3.0;

    v.x_hyper = 0.5 * hyperelliptic_direct(1, param_pair(2.0, s3), tol);

    const double g14 = gamma_fn(0.25);
    v.x_gamma = g14 * g14 / (12.0 * std::sqrt(2.0 * pi));

    v.p192_lhs = complete_K(modulus((s2 - q3) / (1.0 + s3)));
    v.p192_rhs = s2 / (std::pow(27.0, 0.25) * (s3 - 1.0)) * complete_K(modulus(1.0 / s2));
    v.p192b_lhs = complete_K(modulus((s2 + q3) / (1.0 + s3)));
    v.p192b_rhs = std::sqrt(3.0 + 2.0 * s3) * complete_K(modulus(1.0 / s2));

    // the substitution behind these two is 2-to-1 on (0, inf), so the full
    // z-integral equals the whole p-integral, i.e. I3 resp. I4 at (2, sqrt3).
    // For z > 1 the integrands are rewritten in powers of 1/z, otherwise
    // z^12 overflows long before the tail stops contributing.
    v.z12_even_lhs = integrate_to_inf(
                         [](double z) {
                             if (z <= 1.0) {
                                 const double z6 = z * z * z * z * z * z;
                                 return z * z / std::sqrt(1.0 + z6 * z6);
                             }
                             const double w = 1.0 / z;
                             const double w6 = w * w * w * w * w * w;
                             return w * w * w * w / std::sqrt(1.0 + w6 * w6);
                         },
                         0.0, tol, 1.0)
                         .value;
    v.z12_even_rhs = hyperelliptic_direct(3, param_pair(2.0, s3), tol);

    v.z12_quartic_lhs = integrate_to_inf(
                            [](double z) {
                                if (z <= 1.0) {
                                    const double z4 = z * z * z * z;
                                    return (1.0 + z4) / std::sqrt(1.0 + z4 * z4 * z4);
                                }
                                const double w = 1.0 / z;
                                const double w2 = w * w;
                                const double w4 = w2 * w2;
                                const double w12 = w4 * w4 * w4;
                                return (w2 + w2 * w4) / std::sqrt(1.0 + w12);
                            },
                            0.0, tol, 1.0)
                            .value;
    v.z12_quartic_rhs = hyperelliptic_direct(4, param_pair(2.0, s3), tol);
    return v;
}

}  // namespace hyperell

#endif  // HYPERELL_HYPERELLIPTIC_HPP
