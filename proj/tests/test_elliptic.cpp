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
#include <numbers>
#include <random>

#include "hyperell/elliptic.hpp"
#include "hyperell/gamma.hpp"
#include "hyperell/quadrature.hpp"

using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;
using namespace hyperell;
using std::numbers::pi;

namespace {

// fixed-step oracle: 50 unconditional AGM iterations
double agm_oracle(double x, double y) {
    for (int i = 0; i < 50; ++i) {
        const double am = 0.5 * (x + y);
        y = std::sqrt(x * y);
        x = am;
    }
    return x;
}

// independent route for K: tanh-sinh on the defining integral
double complete_K_quadrature(double k, double tol = 1e-12) {
    return integrate(
               [k](double u, double dist) {
                   const double omu = u > 0.5 ? dist : 1.0 - u;
                   return 1.0 / std::sqrt(omu * (1.0 + u) * (1.0 - k * u) * (1.0 + k * u));
               },
               0.0, 1.0, tol)
        .value;
}

}  // namespace

TEST_CASE("agm fixed points and oracle agreement") {
    CHECK(agm(1.0, 1.0) == 1.0);
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> u(1e-3, 1e3);
    for (int i = 0; i < 100; ++i) {
        const double x = u(rng);
        CHECK_THAT(agm(x, x), WithinRel(x, 4e-16));
        const double y = u(rng);
        CHECK_THAT(agm(x, y), WithinRel(agm_oracle(x, y), 1e-15));
    }
    CHECK_THAT(agm(1.0, std::sqrt(2.0) - 1.0), WithinRel(0.67497694882594907, 1e-15));
    CHECK_THROWS_AS(agm(0.0, 1.0), domain_error);
    CHECK_THROWS_AS(agm(1.0, -2.0), domain_error);
}

TEST_CASE("complete elliptic integral of the first kind") {
    CHECK_THAT(complete_K(modulus(0.0)), WithinRel(pi / 2.0, 1e-15));

    // closed Gamma evaluation at the self-complementary modulus
    const double g14 = gamma_fn(0.25);
    CHECK_THAT(complete_K(modulus(1.0 / std::sqrt(2.0))),
               WithinRel(g14 * g14 / (4.0 * std::sqrt(pi)), 1e-12));
    CHECK_THAT(complete_K(modulus(1.0 / std::sqrt(2.0))),
               WithinRel(1.8540746773013719, 1e-14));

    CHECK_THAT(complete_K(modulus(0.5)), WithinRel(complete_K_quadrature(0.5), 1e-12));
    CHECK_THAT(complete_K(modulus(0.5)), WithinRel(1.6857503548125960, 1e-14));

    CHECK_THROWS_AS(modulus(1.0), domain_error);
    CHECK_THROWS_AS(modulus(-0.1), domain_error);
    CHECK_THROWS_AS(modulus(1.2), domain_error);
}

TEST_CASE("agm route vs quadrature oracle across moduli") {
    for (double k = 0.1; k < 0.95; k += 0.1)
        CHECK_THAT(complete_K(modulus(k)), WithinRel(complete_K_quadrature(k), 1e-11));
}

TEST_CASE("modulus pair of (3,1)") {
    const elliptic_pair e = modulus_pair(param_pair(3.0, 1.0));
    CHECK_THAT(e.k_minus.k(), WithinAbs(0.25881904510, 1e-11));
    CHECK_THAT(e.k_minus.k(), WithinRel((std::sqrt(3.0) - 1.0) / (2.0 * std::sqrt(2.0)), 1e-15));
    CHECK_THAT(e.k_plus.k(), WithinAbs(0.96592582629, 1e-11));
    CHECK_THAT(e.k_plus.k(), WithinRel(std::sqrt(1.0 - e.k_minus.k() * e.k_minus.k()), 1e-15));
    CHECK(e.K_plus >= e.K_minus);
    CHECK(e.K_minus > 0.0);
    CHECK_THAT(e.K_minus, WithinRel(1.5981420021125401, 1e-14));
    CHECK_THAT(e.K_plus, WithinRel(2.7680631453687676, 1e-14));
}

TEST_CASE("degenerate pairs are rejected") {
    CHECK_THROWS_AS(modulus_pair(param_pair(1.0 + 1e-13, 1.0)), domain_error);
}

TEST_CASE("complementarity holds over random pairs") {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> u(0.01, 50.0);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        double a = u(rng), b = u(rng);
        if (a < b) std::swap(a, b);
        if (!(a > b) || (a - b) / a < 1e-10) { --i; continue; }
        const elliptic_pair e = modulus_pair(param_pair(a, b));
        const double kp = e.k_plus.k(), km = e.k_minus.k();
        worst = std::max(worst, std::fabs(kp * kp + km * km - 1.0));
    }
    CHECK(worst <= 1e-14);
}

TEST_CASE("K is monotone and bounded below by pi/2") {
    double prev = complete_K(modulus(0.0));
    CHECK(prev >= pi / 2.0 * (1.0 - 1e-15));
    for (double k = 0.05; k < 1.0; k += 0.05) {
        const double cur = complete_K(modulus(k));
        CHECK(cur > prev);
        prev = cur;
    }
}

TEST_CASE("landen descending step") {
    const landen_step id = landen_descend(modulus(0.0));
    CHECK(id.k_new.k() == 0.0);
    CHECK(id.factor == 1.0);

    const modulus half(0.5);
    const landen_step st = landen_descend(half);
    CHECK_THAT(st.k_new.k(), WithinRel(2.0 * std::sqrt(0.5) / 1.5, 1e-15));
    CHECK_THAT(complete_K(half) - st.factor * complete_K(st.k_new), WithinAbs(0.0, 1e-13));

    // the modulus of the page-192 identity
    const double k192 = (std::sqrt(2.0) - std::pow(3.0, 0.25)) / (1.0 + std::sqrt(3.0));
    const landen_step lg = landen_descend(modulus(k192));
    const double lhs = complete_K(modulus(k192));
    CHECK_THAT(lhs - lg.factor * complete_K(lg.k_new), WithinAbs(0.0, 1e-12 * lhs));
}

TEST_CASE("landen invariance over random moduli") {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> u(0.0, 0.999);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const modulus m(u(rng));
        const double lhs = complete_K(m);
        const landen_step st = landen_descend(m);
        worst = std::max(worst, std::fabs(lhs - st.factor * complete_K(st.k_new)) / lhs);
    }
    CHECK(worst <= 1e-12);
}
