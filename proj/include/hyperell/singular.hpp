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

#ifndef HYPERELL_SINGULAR_HPP
#define HYPERELL_SINGULAR_HPP

#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "hyperell/elliptic.hpp"
#include "hyperell/errors.hpp"
#include "hyperell/lauricella.hpp"

namespace hyperell {

/// Solve K(k') / K(k) = sqrt(n) for k in (0, 1) by bisection.  The map
/// k -> K'/K is smooth and strictly decreasing, so the root is unique;
/// bisection costs ~60 AGM pairs and never misconverges.
inline modulus lambda_solver(double n, double tol = 1e-11) {
    if (!(n > 0.0) || !std::isfinite(n)) throw domain_error("lambda_solver: need n > 0");
    const double target = std::sqrt(n);
    auto ratio = [](double k) {
        // K(k) = pi / (2 agm(1, k')) gives K'/K = agm(1, k') / agm(1, k)
        const double kc = std::sqrt((1.0 - k) * (1.0 + k));
        return agm(1.0, kc) / agm(1.0, k);
    };
    double lo = 1e-15, hi = 1.0 - 1e-15;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (ratio(mid) > target)
            lo = mid;
        else
            hi = mid;
        if (hi - lo <= 1e-17 + 4.0 * std::numeric_limits<double>::epsilon() * lo) break;
    }
    const double k = 0.5 * (lo + hi);
    const double residual = std::fabs(ratio(k) - target);
    if (residual > tol)
        throw convergence_error("lambda_solver: residual above tolerance", k, residual, 200);
    return modulus(k);
}

/// One row of the closed-form table: order, lambda*(n) and the ratio a/b
/// whose complementary modulus pair realizes it.
struct singular_entry {
    int n;
    double lambda_closed;
    double ab_ratio;
};

namespace detail {

// Closed-form radicals evaluated on first use.  Stored as arithmetic
// expressions, not decimal literals, so the provenance stays auditable.
inline const std::array<singular_entry, 8>& singular_table() {
    static const std::array<singular_entry, 8> table = [] {
        const double s2 = std::sqrt(2.0), s3 = std::sqrt(3.0), s5 = std::sqrt(5.0);
        const double s7 = std::sqrt(7.0), s11 = std::sqrt(11.0), s13 = std::sqrt(13.0);
        const double s33 = std::sqrt(33.0);
        const double q3 = std::pow(3.0, 0.25), q5 = std::pow(5.0, 0.25);
        std::array<singular_entry, 8> t{};
        t[0] = {3, (s3 - 1.0) / (2.0 * s2), 3.0};
        t[1] = {5, (std::sqrt(s5 - 1.0) - std::sqrt(3.0 - s5)) / 2.0, (1.0 + s5) / 2.0};
        t[2] = {7, (3.0 - s7) / (4.0 * s2), 9.0 / 7.0};
        t[3] = {9, 0.5 * (s2 - q3) * (s3 - 1.0), 2.0 / s3};
        t[4] = {13, 0.5 * (std::sqrt(5.0 * s13 - 17.0) - std::sqrt(19.0 - 5.0 * s13)),
                (1.0 + 5.0 * s13) / 18.0};
        t[5] = {15, (2.0 - s3) * (3.0 - s5) * (s5 - s3) / (8.0 * s2),
                (21.0 - 8.0 * s5) / 3.0};
        t[6] = {25, (3.0 - 2.0 * q5) * (s5 - 2.0) / s2, 9.0 / (4.0 * s5)};
        t[7] = {33,
                0.5 * (std::sqrt(261.0 - 150.0 * s3 - 78.0 * s11 + 45.0 * s33) -
                       std::sqrt(-259.0 + 150.0 * s3 + 78.0 * s11 - 45.0 * s33)),
                3.0 / 16.0 * (5.0 * s3 - s11)};
        return t;
    }();
    return table;
}

}  // namespace detail

inline singular_entry lambda_closed(int n) {
    for (const singular_entry& e : detail::singular_table())
        if (e.n == n) return e;
    throw not_found_error("lambda_closed: order not tabulated");
}

/// Singular modulus through theta constants: k = [theta2(q) / theta3(q)]^2
/// at the nome q = exp(-pi sqrt n) fixed by K'/K = sqrt(n).  Sums run over
/// all integers and stop once the next term drops below 1e-17.
inline modulus theta_modulus(double n, double /*tol*/ = 1e-14) {
    if (!(n > 0.0) || !std::isfinite(n)) throw domain_error("theta_modulus: need n > 0");
    const double q = std::exp(-std::numbers::pi * std::sqrt(n));
    double t2 = 0.0;
    for (int m = 0;; ++m) {
        const double e = (m + 0.5) * (m + 0.5);
        const double term = 2.0 * std::pow(q, e);  // m and -(m+1) paired
        t2 += term;
        if (term < 1e-17) break;
    }
    double t3 = 1.0;
    for (int m = 1;; ++m) {
        const double term = 2.0 * std::pow(q, double(m) * m);  // +-m paired
        t3 += term;
        if (term < 1e-17) break;
    }
    const double r = t2 / t3;
    return modulus(r * r);
}

/// K+/K- three ways: directly from the complete integrals, and through the
/// two F_D^(3) ratio expressions
///   (sqrt(b)/2 H1 + sqrt(a) G) / (sqrt(a) G - sqrt(b)/2 H1)      at (1/2, b/(a+b), b/(b-a))
///   (2 sqrt(a(a+b)) G' + sqrt(b(a+b)) H2) / (2 sqrt(a(a+b)) G' - sqrt(b(a+b)) H2)
///                                                                 at (-1, b/a, -b/a)
struct ratio_values {
    double direct;
    double via_quozi;
    double via_quozi2;
};

inline ratio_values ratio_check(const param_pair& p, double tol = 1e-10) {
    const double a = p.a, b = p.b;
    const elliptic_pair e = modulus_pair(p);
    ratio_values r{};
    r.direct = e.K_plus / e.K_minus;

    const double h1 = h_eval(h_family::h1, 0.5, b / (a + b), b / (b - a), tol);
    const double g1 = h_eval(h_family::g, 0.5, b / (a + b), b / (b - a), tol);
    r.via_quozi = (std::sqrt(b) / 2.0 * h1 + std::sqrt(a) * g1) /
                  (std::sqrt(a) * g1 - std::sqrt(b) / 2.0 * h1);

    const double g2 = h_eval(h_family::g, -1.0, b / a, -b / a, tol);
    const double h2 = h_eval(h_family::h2, -1.0, b / a, -b / a, tol);
    const double wa = 2.0 * std::sqrt(a * (a + b)), wb = std::sqrt(b * (a + b));
    r.via_quozi2 = (wa * g2 + wb * h2) / (wa * g2 - wb * h2);
    return r;
}

/// One tabulated identity H_family(x, y, z) = R * G(x, y, z).
struct identity_case {
    int order;
    h_family family;
    double x, y, z;
    double r;
};

namespace detail {

inline const std::array<identity_case, 16>& identity_table() {
    static const std::array<identity_case, 16> table = [] {
        const double s2 = std::sqrt(2.0), s3 = std::sqrt(3.0), s5 = std::sqrt(5.0);
        const double s7 = std::sqrt(7.0), s11 = std::sqrt(11.0), s13 = std::sqrt(13.0);
        const double s15 = std::sqrt(15.0), s33 = std::sqrt(33.0);
        const double q3 = std::pow(3.0, 0.25), q5 = std::pow(5.0, 0.25);

        const double r3 = 2.0 * s3 * (2.0 - s3);
        const double r5 = 2.0 * std::sqrt(s5 - 2.0);
        const double r7 = 2.0 * (4.0 - s7) / s7;
        const double r9 = s2 / q3;
        const double r13 = 2.0 * std::sqrt(37.0 * s13 - 106.0) / 9.0;
        const double r15 = 2.0 * (s3 - 3.0 * s5) * (s5 - 4.0) / (3.0 * (1.0 + s15));
        const double r25 = 2.0 / q5;
        const double r33 =
            s3 * (17.0 - s33) * std::pow(43.0 - 5.0 * s33, 0.25) / std::pow(2.0, 19.0 / 4.0);

        std::array<identity_case, 16> t{};
        int i = 0;
        auto h1 = [&](int order, double y, double z, double r) {
            t[i++] = {order, h_family::h1, 0.5, y, z, r};
        };
        auto h2 = [&](int order, double y, double r) {
            t[i++] = {order, h_family::h2, -1.0, y, -y, r};
        };
        h1(3, 0.25, -0.5, r3);
        h1(5, (3.0 - s5) / 2.0, -(1.0 + s5) / 2.0, r5);
        h1(7, 7.0 / 16.0, -3.5, r7);
        h1(9, 2.0 * s3 - 3.0, -(2.0 * s3 + 3.0), r9);
        h1(13, (19.0 - 5.0 * s13) / 2.0, -(17.0 + 5.0 * s13) / 2.0, r13);
        h1(15, 3.0 / 32.0 * (3.0 + s5), -1.5 * (9.0 + 4.0 * s5), r15);
        h1(25, 4.0 * (9.0 * s5 - 20.0), -4.0 * (20.0 + 9.0 * s5), r25);
        h1(33, 16.0 / (16.0 + 15.0 * s3 - 3.0 * s11), 16.0 / (16.0 - 15.0 * s3 + 3.0 * s11),
           r33);
        h2(3, 1.0 / 3.0, r3);
        h2(5, (s5 - 1.0) / 2.0, r5);
        h2(7, 7.0 / 9.0, r7);
        h2(9, s3 / 2.0, r9);
        h2(13, (5.0 * s13 - 1.0) / 18.0, r13);
        h2(15, 3.0 / 121.0 * (21.0 + 8.0 * s5), r15);
        h2(25, 4.0 * s5 / 9.0, r25);
        h2(33, 16.0 / (15.0 * s3 - 3.0 * s11), r33);
        return t;
    }();
    return table;
}

}  // namespace detail

inline identity_case identity_lookup(int order, h_family family) {
    for (const identity_case& c : detail::identity_table())
        if (c.order == order && c.family == family) return c;
    throw not_found_error("identity_lookup: (order, family) not tabulated");
}

/// Both sides of a tabulated identity, evaluated through the integral route.
struct identity_values {
    double lhs;  // H_family(x, y, z)
    double rhs;  // R * G(x, y, z)
    double r;
};

inline identity_values singular_identity(int order, h_family family, double tol = 1e-10) {
    const identity_case c = identity_lookup(order, family);
    const double lhs = h_eval(family, c.x, c.y, c.z, tol);
    const double g = h_eval(h_family::g, c.x, c.y, c.z, tol);
    return {lhs, c.r * g, c.r};
}

}  // namespace hyperell

#endif  // HYPERELL_SINGULAR_HPP
