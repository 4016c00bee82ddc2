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

#ifndef HYPERELL_REDUCTION_HPP
#define HYPERELL_REDUCTION_HPP

#include <cmath>

#include "hyperell/elliptic.hpp"
#include "hyperell/errors.hpp"
#include "hyperell/hyperelliptic.hpp"
#include "hyperell/quadrature.hpp"

namespace hyperell {

/// Intermediate u-domain forms produced by the substitution u = p + ab/p
/// (split at its minimum p = sqrt(ab)), kept verbatim so a transcription
/// slip in any one of them is caught by the three-way agreement tests
/// instead of cancelling silently.  With s = sqrt(ab):
///   I1 = (1/s) int_{2s}^inf du / sqrt((u - 2s)(u^2 + (a-b)^2))
///   I2 =       int_{2s}^inf du / sqrt((u - 2s)(u^2 + (a-b)^2))
///   I3 = (1/(2s)) int_{a+b}^inf (1/sqrt(u-2s) - 1/sqrt(u+2s)) du / sqrt(u^2-(a+b)^2)
///   I4 = (1/2)    int_{a+b}^inf (1/sqrt(u-2s) + 1/sqrt(u+2s)) du / sqrt(u^2-(a+b)^2)
///   I5 = (1/(2s)) int_{a+b}^inf (1/sqrt(u-2s) + 1/sqrt(u+2s)) du / sqrt(u^2-(a+b)^2)
///   I6 = (1/2)    int_{a+b}^inf (1/sqrt(u-2s) - 1/sqrt(u+2s)) du / sqrt(u^2-(a+b)^2)
inline double reduced_u_form(int index, const param_pair& p, double tol = 1e-10) {
    detail::check_index(index);
    const double a = p.a, b = p.b;
    const double sab = std::sqrt(a * b);
    if (index <= 2) {
        const double d2 = (a - b) * (a - b);
        auto r = integrate_to_inf(
            [=](double u, double dist) { return 1.0 / std::sqrt(dist * (u * u + d2)); },
            2.0 * sab, tol, 2.0 * sab);
        return index == 1 ? r.value / sab : r.value;
    }
    const double s = a + b;
    const double sign = (index == 4 || index == 5) ? 1.0 : -1.0;
    // u - 2 sqrt(ab) = (sqrt a - sqrt b)^2 + (u - (a+b)), exact even when the
    // pair is nearly equal
    const double gap = (std::sqrt(a) - std::sqrt(b)) * (std::sqrt(a) - std::sqrt(b));
    auto r = integrate_to_inf(
        [=](double u, double dist) {
            const double lead = 1.0 / std::sqrt(dist * (u + s));
            return lead * (1.0 / std::sqrt(gap + dist) + sign / std::sqrt(u + 2.0 * sab));
        },
        s, tol, s);
    const double pref = (index == 3 || index == 5) ? 1.0 / (2.0 * sab) : 0.5;
    return pref * r.value;
}

/// Closed elliptic forms in terms of the complementary pair K+-, evaluated
/// through modulus_pair so the complementary-moduli invariant is inherited:
///   I1 = 2 K- / sqrt(ab(a+b))          I2 = 2 K- / sqrt(a+b)
///   I3 = (K+ - K-) / sqrt(2ab(a+b))    I4 = (K+ + K-) / sqrt(2(a+b))
///   I5 = (K+ + K-) / sqrt(2ab(a+b))    I6 = (K+ - K-) / sqrt(2(a+b))
inline double elliptic_closed(int index, const param_pair& p) {
    detail::check_index(index);
    const elliptic_pair e = modulus_pair(p);
    const double a = p.a, b = p.b;
    switch (index) {
        case 1: return 2.0 * e.K_minus / std::sqrt(a * b * (a + b));
        case 2: return 2.0 * e.K_minus / std::sqrt(a + b);
        case 3: return (e.K_plus - e.K_minus) / std::sqrt(2.0 * a * b * (a + b));
        case 4: return (e.K_plus + e.K_minus) / std::sqrt(2.0 * (a + b));
        case 5: return (e.K_plus + e.K_minus) / std::sqrt(2.0 * a * b * (a + b));
        default: return (e.K_plus - e.K_minus) / std::sqrt(2.0 * (a + b));
    }
}

}  // namespace hyperell

#endif  // HYPERELL_REDUCTION_HPP
