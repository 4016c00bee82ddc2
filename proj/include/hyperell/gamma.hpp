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

#ifndef HYPERELL_GAMMA_HPP
#define HYPERELL_GAMMA_HPP

#include <cmath>
#include <complex>
#include <numbers>

#include "hyperell/errors.hpp"

namespace hyperell {

namespace detail {

// Lanczos approximation, g = 7, 9 coefficients.  Relative error over the
// right half plane is a few 1e-14, comfortably inside the 1e-12 budget the
// library needs for the Gamma-based cross checks.
inline constexpr double lanczos_g = 7.0;
inline constexpr double lanczos_coeff[9] = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7,
};

inline std::complex<double> lanczos_sum(std::complex<double> z) {
    std::complex<double> s = lanczos_coeff[0];
    for (int i = 1; i < 9; ++i) s += lanczos_coeff[i] / (z + double(i));
    return s;
}

}  // namespace detail

/// Gamma function for complex argument (principal branch), Lanczos based,
/// with reflection for Re z < 1/2.
inline std::complex<double> gamma_fn(std::complex<double> z) {
    using std::numbers::pi;
    if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real()))
        throw pole_error("gamma_fn: pole at non-positive integer");
    if (z.real() < 0.5) {
        // Gamma(z) Gamma(1-z) = pi / sin(pi z)
        return pi / (std::sin(pi * z) * gamma_fn(1.0 - z));
    }
    const std::complex<double> zm1 = z - 1.0;
    const std::complex<double> t = zm1 + (detail::lanczos_g + 0.5);
    return std::sqrt(2.0 * pi) * std::pow(t, zm1 + 0.5) * std::exp(-t) *
           detail::lanczos_sum(zm1);
}

/// Real-argument overload.
inline double gamma_fn(double x) { return gamma_fn(std::complex<double>(x, 0.0)).real(); }

}  // namespace hyperell

#endif  // HYPERELL_GAMMA_HPP
