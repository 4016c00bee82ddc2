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

#include "hyperell/formulae.hpp"
#include "hyperell/hyperelliptic.hpp"
#include "hyperell/reduction.hpp"

using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;
using namespace hyperell;
using std::numbers::pi;

TEST_CASE("hypergeometric forms reproduce the integrals") {
    const param_pair p21(2.0, 1.0);
    CHECK_THAT(lauricella_form(2, p21, 1e-9),
               WithinRel(hyperelliptic_direct(2, p21, 1e-10), 1e-8));

    const param_pair p31(3.0, 1.0);
    CHECK_THAT(lauricella_form(5, p31, 1e-9), WithinRel(elliptic_closed(5, p31), 1e-8));
    const elliptic_pair e = modulus_pair(p31);
    CHECK_THAT(lauricella_form(5, p31, 1e-9),
               WithinRel((e.K_plus + e.K_minus) / std::sqrt(2.0 * 3.0 * 4.0), 1e-8));

    const double v1 = lauricella_form(1, param_pair(4.0, 0.7), 1e-9);
    CHECK(std::isfinite(v1));
    CHECK(v1 > 0.0);
}

TEST_CASE("consistency triangle over the verification grid") {
    for (double a : {1.5, 2.0, 3.0})
        for (double b : {0.5, 1.0, 1.3}) {
            const param_pair p(a, b);
            for (int idx = 1; idx <= 6; ++idx) {
                INFO("pair (" << a << "," << b << ") index " << idx);
                const double direct = hyperelliptic_direct(idx, p, 1e-10);
                CHECK_THAT(lauricella_form(idx, p, 1e-9), WithinRel(direct, 1e-8));
                CHECK_THAT(elliptic_closed(idx, p), WithinRel(direct, 1e-8));
            }
        }
}

TEST_CASE("pi estimates") {
    const pi_verdict v1 = pi_estimate(1, param_pair(2.0, 1.0), 1e-9);
    CHECK_THAT(v1.pi_value, WithinAbs(pi, 1e-8));
    CHECK(v1.abs_error == std::fabs(v1.pi_value - pi));

    const pi_verdict v4 = pi_estimate(4, param_pair(3.0, 1.0), 1e-9);
    CHECK_THAT(v4.pi_value, WithinAbs(pi, 1e-8));

    const pi_verdict v6 = pi_estimate(6, param_pair(5.0, 2.0), 1e-9);
    CHECK_THAT(v6.pi_value, WithinAbs(pi, 1e-8));
}

TEST_CASE("conjugate-paired evaluations stay real") {
    for (const auto& ab : {std::pair{2.0, 1.0}, std::pair{5.0, 2.0}, std::pair{1.5, 1.3}}) {
        const param_pair p(ab.first, ab.second);
        for (double apar : {1.5, 0.5}) {
            const cplx v = fd_integral(detail::conjugate_quad_spec(apar, p), 1e-9);
            CHECK(std::fabs(v.imag()) <= 1e-10 * std::max(1.0, std::fabs(v.real())));
        }
    }
}

TEST_CASE("analytic continuation values") {
    // reference: 50-digit arithmetic through the pivot route
    const continuation_values v31 = continuation_pair(param_pair(3.0, 1.0), 1e-10);
    CHECK_THAT(v31.lhs1.real(), WithinAbs(-0.41535540232144347, 1e-9));
    CHECK_THAT(v31.lhs1.imag(), WithinAbs(0.41535540232144347, 1e-9));
    CHECK_THAT(v31.lhs2.real(), WithinAbs(0.71941666001895208, 1e-9));
    CHECK_THAT(v31.lhs2.imag(), WithinAbs(0.71941666001895208, 1e-9));
    CHECK(std::abs(v31.lhs1 - v31.rhs1) <= 1e-8 * std::abs(v31.rhs1));
    CHECK(std::abs(v31.lhs2 - v31.rhs2) <= 1e-8 * std::abs(v31.rhs2));

    const continuation_values v21 = continuation_pair(param_pair(2.0, 1.0), 1e-10);
    CHECK_THAT(v21.lhs2.real(), WithinAbs(0.82242940323900073, 1e-9));
    CHECK(std::abs(v21.lhs1 - v21.rhs1) <= 1e-8 * std::abs(v21.rhs1));
    CHECK(std::abs(v21.lhs2 - v21.rhs2) <= 1e-8 * std::abs(v21.rhs2));

    const continuation_values v52 = continuation_pair(param_pair(5.0, 2.0), 1e-10);
    CHECK(std::abs(v52.lhs1 - v52.rhs1) <= 1e-8 * std::abs(v52.rhs1));
    CHECK(std::abs(v52.lhs2 - v52.rhs2) <= 1e-8 * std::abs(v52.rhs2));
}

TEST_CASE("continuation phases are the principal-branch constants") {
    const continuation_values v = continuation_pair(param_pair(3.0, 1.0), 1e-10);
    const cplx phase1 = v.lhs1 / std::abs(v.lhs1);
    const cplx phase2 = v.lhs2 / std::abs(v.lhs2);
    const double s2 = std::sqrt(2.0);
    CHECK(std::abs(phase1 - cplx(-1.0, 1.0) / s2) < 1e-9);
    CHECK(std::abs(phase2 - cplx(1.0, 1.0) / s2) < 1e-9);

    // the two closed-form moduli differ by sqrt(b/a)
    CHECK_THAT(std::abs(v.rhs1) / std::abs(v.rhs2),
               WithinRel(std::sqrt(1.0 / 3.0), 1e-12));
}
