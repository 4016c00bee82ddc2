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

#ifndef HYPERELL_QUADRATURE_HPP
#define HYPERELL_QUADRATURE_HPP

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <optional>
#include <type_traits>
#include <utility>
#include <vector>

#include "hyperell/errors.hpp"

namespace hyperell {

/// Outcome of one quadrature: estimate, conservative error bound, node count.
template <class T>
struct quad_result {
    T value{};
    double error_estimate = 0.0;
    long evaluations = 0;
};

namespace detail {

// One tanh-sinh abscissa on the positive half axis.  `dist` is the exact
// distance 1 - tanh((pi/2) sinh t) to the endpoint, kept separately so that
// integrands with endpoint singularities never see a rounded 1 - x.
struct ts_node {
    double t;
    double dist;
    double weight;  // (pi/2) cosh(t) sech^2((pi/2) sinh t), no h factor
};

// Past this t the endpoint distance underflows and nodes contribute nothing
// for any integrable singularity.
inline constexpr double ts_t_cut = 6.115;
inline constexpr double ts_dist_min = 1e-305;

inline ts_node make_ts_node(double t) {
    const double s = (std::numbers::pi / 2.0) * std::sinh(t);
    const double e2 = std::exp(-2.0 * s);
    const double dist = 2.0 * e2 / (1.0 + e2);
    // sech^2(s) == dist * (2 - dist), which stays accurate where cosh(s)
    // squared would overflow.
    const double w = (std::numbers::pi / 2.0) * std::cosh(t) * dist * (2.0 - dist);
    return {t, dist, w};
}

// Node tables per refinement level.  Level 0 holds t = 0, h0, 2 h0, ...;
// level L > 0 holds the odd multiples of h0 / 2^L.  Built once, shared
// read-only afterwards (function-local static initialization is race-safe).
struct ts_table {
    std::vector<std::vector<ts_node>> levels;

    explicit ts_table(int max_levels) {
        levels.resize(static_cast<std::size_t>(max_levels) + 1);
        for (int lv = 0; lv <= max_levels; ++lv) {
            const double h = std::ldexp(1.0, -lv);
            const long step = lv == 0 ? 1 : 2;
            const long start = lv == 0 ? 0 : 1;
            for (long j = start;; j += step) {
                const double t = double(j) * h;
                if (t > ts_t_cut) break;
                ts_node n = make_ts_node(t);
                if (n.dist < ts_dist_min) break;
                levels[static_cast<std::size_t>(lv)].push_back(n);
            }
        }
    }
};

inline constexpr int ts_max_levels = 12;

inline const ts_table& ts_nodes() {
    static const ts_table table(ts_max_levels);
    return table;
}

template <class T>
inline double abs_of(const T& v) {
    if constexpr (std::is_floating_point_v<T>)
        return std::fabs(v);
    else
        return std::abs(v);
}

template <class T>
struct ts_outcome {
    T value{};
    double error_estimate = 0.0;
    long evaluations = 0;
    bool converged = false;
};

// g is evaluated as g(t, dist) with t in (-1, 1) mapped through the
// tanh-sinh transform; dist is the exact distance of tanh((pi/2) sinh t)
// to the nearer endpoint of (-1, 1).
template <class G>
auto tanh_sinh_core(G&& g, double tol, int max_levels)
    -> ts_outcome<std::decay_t<decltype(g(0.0, 1.0))>> {
    using T = std::decay_t<decltype(g(0.0, 1.0))>;
    const ts_table& table = ts_nodes();
    if (max_levels > ts_max_levels) max_levels = ts_max_levels;

    long evals = 0;
    T sum{};
    double l1 = 0.0;
    {
        const std::vector<ts_node>& lv0 = table.levels[0];
        sum = lv0[0].weight * g(0.0, 1.0);
        l1 = abs_of(sum);
        ++evals;
        for (std::size_t i = 1; i < lv0.size(); ++i) {
            const ts_node& n = lv0[i];
            const double x = 1.0 - n.dist;
            T term = n.weight * (g(x, n.dist) + g(-x, n.dist));
            sum += term;
            l1 += abs_of(term);
            evals += 2;
        }
    }

    double h = 1.0;
    T prev = h * sum;
    double prev_l1 = h * l1;
    double diff = std::numeric_limits<double>::infinity();
    double prev_diff = std::numeric_limits<double>::infinity();
    const double eps = std::numeric_limits<double>::epsilon();

    for (int lv = 1; lv <= max_levels; ++lv) {
        h *= 0.5;
        T new_sum{};
        double new_l1 = 0.0;
        for (const ts_node& n : table.levels[static_cast<std::size_t>(lv)]) {
            const double x = 1.0 - n.dist;
            T term = n.weight * (g(x, n.dist) + g(-x, n.dist));
            new_sum += term;
            new_l1 += abs_of(term);
            evals += 2;
        }
        T cur = prev / 2.0 + h * new_sum;
        double cur_l1 = prev_l1 / 2.0 + h * new_l1;
        prev_diff = diff;
        diff = abs_of(T(cur - prev));
        prev = cur;
        prev_l1 = cur_l1;
        const double goal = std::max(tol * abs_of(cur), tol);
        const double floor = 8.0 * eps * cur_l1;
        // two consecutive small differences; a single level landing near its
        // predecessor by accident is not trusted
        const bool settled = (diff <= 0.25 * goal && prev_diff <= 0.25 * goal) ||
                             (diff <= floor && prev_diff <= 64.0 * floor);
        if (lv >= 2 && settled) {
            return {cur, std::max(diff, floor), evals, true};
        }
    }
    return {prev, std::max(diff, 8.0 * eps * prev_l1), evals, false};
}

template <class T>
quad_result<T> finish_quadrature(ts_outcome<T>&& oc, double factor) {
    oc.value = oc.value * factor;
    oc.error_estimate *= factor;
    if (!oc.converged)
        throw convergence_error("tanh-sinh quadrature did not converge within the level cap",
                                std::complex<double>(oc.value), oc.error_estimate,
                                oc.evaluations);
    return {oc.value, oc.error_estimate, oc.evaluations};
}

template <class F>
auto call_integrand(F& f, double x, double dist) {
    if constexpr (std::is_invocable_v<F&, double, double>)
        return f(x, dist);
    else
        return f(x);
}

inline void check_tol(double tol) {
    if (!(tol >= 1e-14 && tol <= 1e-3))
        throw domain_error("quadrature tolerance must lie in [1e-14, 1e-3]");
}

}  // namespace detail

/// Integrate f over the finite interval [lo, hi].  f may be called either as
/// f(x) or as f(x, dist) where dist is the exact distance from x to the
/// nearer endpoint; the second form keeps endpoint singularities accurate.
template <class F>
auto integrate(F&& f, double lo, double hi, double tol = 1e-10,
               int max_levels = detail::ts_max_levels) {
    detail::check_tol(tol);
    if (!(std::isfinite(lo) && std::isfinite(hi) && lo < hi))
        throw domain_error("integrate: need finite lo < hi");
    const double d = 0.5 * (hi - lo);
    auto g = [&](double t, double dist) {
        const double xdist = d * dist;
        const double x = t < 0.0 ? lo + xdist : hi - xdist;
        return detail::call_integrand(f, x, xdist);
    };
    return detail::finish_quadrature(detail::tanh_sinh_core(g, tol, max_levels), d);
}

/// Integrate f over [lo, +inf) through the rational map p = lo + L s/(1-s).
/// The map keeps algebraic tails p^(-alpha), alpha > 1, integrable under the
/// tanh-sinh rule without oscillation artifacts.  dist passed to f is p - lo.
template <class F>
auto integrate_to_inf(F&& f, double lo, double tol = 1e-10, double scale = 1.0,
                      int max_levels = detail::ts_max_levels) {
    detail::check_tol(tol);
    if (!(std::isfinite(lo)) || !(scale > 0.0) || !std::isfinite(scale))
        throw domain_error("integrate_to_inf: bad lower limit or scale");
    auto g = [&](double t, double dist) {
        const double half = 0.5 * dist;
        if (t < 0.0) {
            // s near 0: p close to lo, pass the exact offset
            const double s = half;
            const double om = 1.0 - s;
            const double pdist = scale * s / om;
            const double jac = scale / (om * om);
            return detail::call_integrand(f, lo + pdist, pdist) * jac;
        }
        // s near 1: p large; split the Jacobian so neither factor overflows
        const double om = half;  // 1 - s, exact
        const double pdist = scale * (1.0 - om) / om;
        const double m = scale / om;
        return detail::call_integrand(f, lo + pdist, pdist) * m * (1.0 / om);
    };
    return detail::finish_quadrature(detail::tanh_sinh_core(g, tol, max_levels), 0.5);
}

/// Declarative description of one 1-D integral.
template <class F>
struct integrand_spec {
    F evaluator;  // f(x) or f(x, dist)
    double lower = 0.0;
    double upper = 1.0;  // +infinity allowed
    // Known endpoint singularity exponents, each in (-1, 0].  The tanh-sinh
    // rule absorbs them without an explicit substitution; they are validated
    // for integrability.
    std::optional<double> singular_exponent_lower{};
    std::optional<double> singular_exponent_upper{};
    double scale = 1.0;  // rational-map scale for semi-infinite domains
};

template <class F>
integrand_spec(F, double, double) -> integrand_spec<F>;

template <class F>
auto integrate(const integrand_spec<F>& spec, double tol) {
    for (const auto& e : {spec.singular_exponent_lower, spec.singular_exponent_upper})
        if (e && !(*e > -1.0 && *e <= 0.0))
            throw domain_error("integrand_spec: singularity exponent must lie in (-1, 0]");
    auto f = spec.evaluator;
    if (std::isinf(spec.upper)) return integrate_to_inf(f, spec.lower, tol, spec.scale);
    return integrate(f, spec.lower, spec.upper, tol);
}

}  // namespace hyperell

#endif  // HYPERELL_QUADRATURE_HPP
