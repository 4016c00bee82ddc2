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

#ifndef HYPERELL_FORMULAE_HPP
#define HYPERELL_FORMULAE_HPP

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "hyperell/elliptic.hpp"
#include "hyperell/errors.hpp"
#include "hyperell/hyperelliptic.hpp"
#include "hyperell/lauricella.hpp"

namespace hyperell {

namespace detail {

// F_D^(4)(a; 1/2; 2 | 1+ia, 1-ia, 1+ib, 1-ib): the conjugate-paired spec
// shared by the first two hypergeometric forms and the continuation pair
inline lauricella_spec conjugate_quad_spec(double a_param, const param_pair& p) {
    const cplx ia(0.0, p.a), ib(0.0, p.b);
    return lauricella_spec::equal_exponents(
        a_param, 0.5, 2.0, {1.0 + ia, 1.0 - ia, 1.0 + ib, 1.0 - ib});
}

}  // namespace detail

/// Lauricella representations of the six integrals:
///   I1 = (pi/2) F_D^(4)(3/2; 1/2; 2 | 1+ia, 1-ia, 1+ib, 1-ib)
///   I2 = (pi/2) F_D^(4)(1/2; 1/2; 2 | 1+ia, 1-ia, 1+ib, 1-ib)
///   I3 = pi / (2 sqrt(2a(a^2-b^2))) H1(1/2, b/(a+b), b/(b-a))
///   I4 = pi sqrt(a / (2(a^2-b^2)))  G (1/2, b/(a+b), b/(b-a))
///   I5 = (pi / (a sqrt b))          G (-1, b/a, -b/a)
///   I6 = (pi sqrt b / (2a))         H2(-1, b/a, -b/a)
/// The first two produce a real value from conjugate-paired complex
/// arguments; a non-negligible imaginary residue is a consistency failure.
inline double lauricella_form(int index, const param_pair& p, double tol = 1e-9) {
    detail::check_index(index);
    using std::numbers::pi;
    const double a = p.a, b = p.b;
    cplx v;
    switch (index) {
        case 1:
            v = pi / 2.0 * fd_integral(detail::conjugate_quad_spec(1.5, p), tol);
            break;
        case 2:
            v = pi / 2.0 * fd_integral(detail::conjugate_quad_spec(0.5, p), tol);
            break;
        case 3:
            v = pi / (2.0 * std::sqrt(2.0 * a * (a * a - b * b))) *
                h_eval(h_family::h1, 0.5, b / (a + b), b / (b - a), tol);
            break;
        case 4:
            v = pi * std::sqrt(a / (2.0 * (a * a - b * b))) *
                h_eval(h_family::g, 0.5, b / (a + b), b / (b - a), tol);
            break;
        case 5:
            v = pi / (a * std::sqrt(b)) * h_eval(h_family::g, -1.0, b / a, -b / a, tol);
            break;
        default:
            v = pi * std::sqrt(b) / (2.0 * a) * h_eval(h_family::h2, -1.0, b / a, -b / a, tol);
            break;
    }
    if (std::fabs(v.imag()) >= tol * std::max(1.0, std::fabs(v.real())))
        throw consistency_error("lauricella_form: imaginary residue above tolerance", v.imag());
    return v.real();
}

/// A pi estimate produced by one of the six elliptic/hypergeometric ratios.
struct pi_verdict {
    int index;
    param_pair pair;
    double pi_value;
    double abs_error;  // |pi_value - pi|, recorded, never discarded
};

/// The six ratios; each one returns pi exactly in exact arithmetic:
///   (1) 4 K- / (sqrt(ab(a+b)) F1)        (2) 4 K- / (sqrt(a+b) F2)
///   (3) 2 sqrt((a-b)/b) (K+ - K-) / H1   (4) sqrt((a-b)/a) (K+ + K-) / G
///   (5) sqrt(a/(2(a+b))) (K+ + K-) / G'  (6) sqrt(2) a (K+ - K-) / (sqrt(b(a+b)) H2)
inline pi_verdict pi_estimate(int index, const param_pair& p, double tol = 1e-9) {
    detail::check_index(index);
    const double a = p.a, b = p.b;
    const elliptic_pair e = modulus_pair(p);
    double num = 0.0, den = 0.0;
    switch (index) {
        case 1:
            num = 4.0 / std::sqrt(a * b * (a + b)) * e.K_minus;
            den = fd_integral(detail::conjugate_quad_spec(1.5, p), tol).real();
            break;
        case 2:
            num = 4.0 / std::sqrt(a + b) * e.K_minus;
            den = fd_integral(detail::conjugate_quad_spec(0.5, p), tol).real();
            break;
        case 3:
            num = 2.0 * std::sqrt((a - b) / b) * (e.K_plus - e.K_minus);
            den = h_eval(h_family::h1, 0.5, b / (a + b), b / (b - a), tol);
            break;
        case 4:
            num = std::sqrt((a - b) / a) * (e.K_plus + e.K_minus);
            den = h_eval(h_family::g, 0.5, b / (a + b), b / (b - a), tol);
            break;
        case 5:
            num = std::sqrt(a / (2.0 * (a + b))) * (e.K_plus + e.K_minus);
            den = h_eval(h_family::g, -1.0, b / a, -b / a, tol);
            break;
        default:
            num = std::sqrt(2.0) * a / std::sqrt(b * (a + b)) * (e.K_plus - e.K_minus);
            den = h_eval(h_family::h2, -1.0, b / a, -b / a, tol);
            break;
    }
    const double v = num / den;
    return {index, p, v, std::fabs(v - std::numbers::pi)};
}

/// The two F_D^(3) evaluations at arguments ((a+b)/b, (b-a)/b, 2), i.e. in
/// the analytic continuation (argument 2 sits on the cut, so the integral
/// representation does not apply there directly).
///
/// lhs: the four-argument conjugate-paired F_D^(4), which the integral
/// representation does cover, pulled back through the pivot reduction:
/// lhs = (ib)^a_param * F_D^(4)(a_param; 1/2; 2 | 1+ia, 1-ia, 1+ib, 1-ib),
/// principal branch, pivot 1 - ib.
///
/// rhs: the closed forms these must equal,
///   rhs1 = 4(-1+i)/(pi sqrt2) * (b / sqrt(a(a+b))) * K-
///   rhs2 = 4( 1+i)/(pi sqrt2) * sqrt(b / (a+b))    * K-
/// The unimodular constants are exactly the principal branch values
/// (ib)^(3/2) = b^(3/2) (-1+i)/sqrt2 and (ib)^(1/2) = sqrt(b) (1+i)/sqrt2;
/// pivoting at 1 + ib instead would conjugate them.
struct continuation_values {
    cplx lhs1, rhs1;
    cplx lhs2, rhs2;
};

inline continuation_values continuation_pair(const param_pair& p, double tol = 1e-9) {
    using std::numbers::pi;
    const double a = p.a, b = p.b;
    const elliptic_pair e = modulus_pair(p);
    const cplx ib(0.0, b);

    continuation_values v{};
    v.lhs1 = std::pow(ib, 1.5) * fd_integral(detail::conjugate_quad_spec(1.5, p), tol);
    v.lhs2 = std::pow(ib, 0.5) * fd_integral(detail::conjugate_quad_spec(0.5, p), tol);
    const cplx u1(-1.0, 1.0), u2(1.0, 1.0);
    v.rhs1 = 4.0 * u1 / (pi * std::sqrt(2.0)) * (b / std::sqrt(a * (a + b))) * e.K_minus;
    v.rhs2 = 4.0 * u2 / (pi * std::sqrt(2.0)) * std::sqrt(b / (a + b)) * e.K_minus;
    return v;
}

}  // namespace hyperell

#endif  // HYPERELL_FORMULAE_HPP
