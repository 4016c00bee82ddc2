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

#include <catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <numbers>

#include "hyperell/gamma.hpp"

using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;
using hyperell::gamma_fn;

TEST_CASE("gamma at simple real points") {
    CHECK_THAT(gamma_fn(0.5), WithinRel(std::sqrt(std::numbers::pi), 1e-14));
    CHECK_THAT(gamma_fn(1.0), WithinRel(1.0, 1e-14));
    CHECK_THAT(gamma_fn(5.0), WithinRel(24.0, 1e-14));
    // reference: 50-digit arithmetic
    CHECK_THAT(gamma_fn(0.25), WithinRel(3.6256099082219083, 1e-13));
}

TEST_CASE("gamma matches std::tgamma on a real grid") {
    for (double x = 0.1; x <= 10.0; x += 0.1) {
        INFO("x = " << x);
        CHECK_THAT(gamma_fn(x), WithinRel(std::tgamma(x), 1e-12));
    }
}

TEST_CASE("gamma at complex points") {
    const std::complex<double> g1i = gamma_fn(std::complex<double>(1.0, 1.0));
    CHECK_THAT(g1i.real(), WithinAbs(0.49801566811835604, 1e-13));
    CHECK_THAT(g1i.imag(), WithinAbs(-0.15494982830181069, 1e-13));

    const std::complex<double> g = gamma_fn(std::complex<double>(0.5, -2.0));
    CHECK_THAT(g.real(), WithinAbs(0.089855176706431636, 1e-13));
    CHECK_THAT(g.imag(), WithinAbs(0.060493760292887568, 1e-13));
}

TEST_CASE("reflection identity") {
    using std::numbers::pi;
    const std::complex<double> zs[] = {{0.3, 0.7}, {-1.2, 0.4}, {0.1, -2.0}};
    for (const auto& z : zs) {
        const std::complex<double> lhs = gamma_fn(z) * gamma_fn(1.0 - z);
        const std::complex<double> rhs = pi / std::sin(pi * z);
        CHECK_THAT(std::abs(lhs - rhs), WithinAbs(0.0, 1e-12 * std::abs(rhs)));
    }
}

TEST_CASE("gamma poles are rejected") {
    CHECK_THROWS_AS(gamma_fn(0.0), hyperell::pole_error);
    CHECK_THROWS_AS(gamma_fn(-3.0), hyperell::pole_error);
    CHECK_THROWS_AS(gamma_fn(std::complex<double>(-1.0, 0.0)), hyperell::pole_error);
}
