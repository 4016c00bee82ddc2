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

#ifndef HYPERELL_LAURICELLA_HPP
#define HYPERELL_LAURICELLA_HPP

#include <cmath>
#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

#include "hyperell/errors.hpp"
#include "hyperell/gamma.hpp"
#include "hyperell/quadrature.hpp"

namespace hyperell {

using cplx = std::complex<double>;

/// Rising factorial (lambda)_m = lambda (lambda+1) ... (lambda+m-1).
inline cplx pochhammer(cplx lambda, int m) {
    if (m < 0) throw domain_error("pochhammer: m must be non-negative");
    cplx p = 1.0;
    for (int i = 0; i < m; ++i) p *= lambda + double(i);
    return p;
}

/// Memoized (lambda)_m values for one base.  (lambda)_0 = 1 and
/// (lambda)_{m+1} = (lambda)_m (lambda + m).  Instances are per call site,
/// so concurrent use never shares mutable state.
class pochhammer_cache {
public:
    explicit pochhammer_cache(cplx base) : base_(base), vals_{1.0} {}

    cplx operator()(int m) {
        if (m < 0) throw domain_error("pochhammer_cache: m must be non-negative");
        while (vals_.size() <= static_cast<std::size_t>(m)) {
            const double k = double(vals_.size() - 1);
            vals_.push_back(vals_.back() * (base_ + k));
        }
        return vals_[static_cast<std::size_t>(m)];
    }

    cplx base() const noexcept { return base_; }

private:
    cplx base_;
    std::vector<cplx> vals_;
};

/// Full parameter set of F_D^(n): one numerator parameter a, n exponents
/// b_1..b_n, one denominator parameter c and n arguments x_1..x_n.
struct lauricella_spec {
    cplx a;
    std::vector<cplx> b;
    cplx c;
    std::vector<cplx> x;

    lauricella_spec(cplx a_, std::vector<cplx> b_, cplx c_, std::vector<cplx> x_)
        : a(a_), b(std::move(b_)), c(c_), x(std::move(x_)) {
        if (x.empty()) throw domain_error("lauricella_spec: need n >= 1 arguments");
        if (b.size() != x.size())
            throw domain_error("lauricella_spec: need one exponent per argument");
    }

    /// Equal-exponent shorthand: the repetition count of b is set by the
    /// number of arguments.
    static lauricella_spec equal_exponents(cplx a, cplx b, cplx c, std::vector<cplx> x) {
        std::vector<cplx> bs(x.size(), b);
        return lauricella_spec(a, std::move(bs), c, std::move(x));
    }

    int n() const noexcept { return static_cast<int>(x.size()); }
};

namespace detail {

inline bool is_nonpositive_integer(cplx z) {
    return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

inline bool on_branch_cut(cplx x) { return x.imag() == 0.0 && x.real() >= 1.0; }

}  // namespace detail

/// Gauss 2F1 by its defining series; requires |x| < 1.
inline cplx gauss_2f1(cplx a, cplx b, cplx c, cplx x, double tol = 1e-13) {
    if (detail::is_nonpositive_integer(c))
        throw pole_error("gauss_2f1: c is a non-positive integer");
    if (!(std::abs(x) < 1.0)) throw domain_error("gauss_2f1: series needs |x| < 1");
    cplx sum = 1.0, term = 1.0;
    int small_run = 0;
    for (int m = 0; m < 200000; ++m) {
        term *= (a + double(m)) * (b + double(m)) / ((c + double(m)) * double(m + 1)) * x;
        sum += term;
        if (std::abs(term) < tol * std::abs(sum)) {
            if (++small_run == 3) return sum;
        } else {
            small_run = 0;
        }
    }
    throw convergence_error("gauss_2f1: series did not settle", sum, std::abs(term), 200000);
}

/// F_D^(n) by total-degree layers.  Layer M contributes
/// (a)_M / (c)_M * [z^M] prod_i sum_m (b_i)_m x_i^m z^m / m!, accumulated by
/// incremental convolution of the per-argument power series.  The sum stops
/// once three consecutive layers are each below tol * |partial sum|, which
/// guards against premature cutoff when terms are non-monotone near the
/// unit circle.
inline cplx fd_series(const lauricella_spec& spec, double tol = 1e-12, int max_degree = 2000) {
    const int n = spec.n();
    for (const cplx& xi : spec.x)
        if (!(std::abs(xi) < 1.0))
            throw domain_error("fd_series: series needs max |x_i| < 1");
    if (detail::is_nonpositive_integer(spec.c))
        throw pole_error("fd_series: c is a non-positive integer");

    // per-argument series P_i[m] = (b_i)_m x_i^m / m! and running partial
    // products Q_j = P_1 * ... * P_j, all grown one degree at a time
    std::vector<std::vector<cplx>> P(n, {cplx(1.0)});
    std::vector<std::vector<cplx>> Q(n, {cplx(1.0)});
    cplx ratio = 1.0;  // (a)_M / (c)_M
    cplx partial = 1.0;
    int small_run = 0;

    for (int M = 1; M <= max_degree; ++M) {
        for (int i = 0; i < n; ++i) {
            const cplx next =
                P[i].back() * (spec.b[i] + double(M - 1)) * spec.x[i] / double(M);
            P[i].push_back(next);
        }
        Q[0].push_back(P[0][M]);
        for (int j = 1; j < n; ++j) {
            cplx acc = 0.0;
            for (int k = 0; k <= M; ++k) acc += Q[j - 1][k] * P[j][M - k];
            Q[j].push_back(acc);
        }
        ratio *= (spec.a + double(M - 1)) / (spec.c + double(M - 1));
        const cplx layer = ratio * Q[n - 1][M];
        partial += layer;
        if (std::abs(layer) < tol * std::abs(partial)) {
            if (++small_run == 3) return partial;
        } else {
            small_run = 0;
        }
    }
    throw convergence_error("fd_series: max total degree exceeded", partial,
                            std::abs(partial) * tol, max_degree);
}

/// F_D^(n) through the one-dimensional Euler-type integral
///   Gamma(c) / (Gamma(a) Gamma(c-a)) *
///     int_0^1 u^(a-1) (1-u)^(c-a-1) prod_i (1 - x_i u)^(-b_i) du,
/// valid for Re c > Re a > 0 and arguments off the cut [1, inf).  Complex
/// powers take the principal branch; since no x_i lies on [1, inf), the
/// factors 1 - x_i u never cross the negative real axis for u in (0, 1).
inline quad_result<cplx> fd_integral_result(const lauricella_spec& spec, double tol = 1e-8) {
    if (!(spec.c.real() > spec.a.real() && spec.a.real() > 0.0))
        throw domain_error("fd_integral: needs Re c > Re a > 0");
    bool near_circle = false;
    for (const cplx& xi : spec.x) {
        if (detail::on_branch_cut(xi))
            throw branch_error("fd_integral: argument on the cut [1, inf)");
        const double r = std::abs(xi);
        if (r >= 1.0 - 1e-8 && r <= 1.0 + 1e-9) near_circle = true;
    }

    const int n = spec.n();
    const bool real_ac = spec.a.imag() == 0.0 && spec.c.imag() == 0.0;
    std::vector<cplx> omx(spec.x.size());  // 1 - x_i
    for (std::size_t i = 0; i < spec.x.size(); ++i) omx[i] = 1.0 - spec.x[i];
    bool real_bx = true;
    for (int i = 0; i < n; ++i)
        if (spec.b[static_cast<std::size_t>(i)].imag() != 0.0 ||
            spec.x[static_cast<std::size_t>(i)].imag() != 0.0)
            real_bx = false;

    const cplx ea = spec.a - 1.0;
    const cplx ec = spec.c - spec.a - 1.0;
    auto f = [&](double u, double dist) -> cplx {
        const double omu = u > 0.5 ? dist : 1.0 - u;
        cplx w;
        if (real_ac)
            w = std::pow(u, ea.real()) * std::pow(omu, ec.real());
        else
            w = std::exp(ea * std::log(u)) * std::exp(ec * std::log(omu));
        for (int i = 0; i < n; ++i) {
            // 1 - x u = (1 - u) + u (1 - x): exact 1-u on the right half
            // keeps arguments close to the circle accurate
            const cplx base = omu + u * omx[static_cast<std::size_t>(i)];
            const cplx bi = spec.b[static_cast<std::size_t>(i)];
            if (real_bx)
                w *= std::pow(base.real(), -bi.real());
            else
                w *= std::pow(base, -bi);
        }
        return w;
    };

    auto r = integrate(f, 0.0, 1.0, tol);
    cplx pref;
    if (real_ac) {
        pref = gamma_fn(spec.c.real()) /
               (gamma_fn(spec.a.real()) * gamma_fn(spec.c.real() - spec.a.real()));
    } else {
        pref = gamma_fn(spec.c) / (gamma_fn(spec.a) * gamma_fn(spec.c - spec.a));
    }
    quad_result<cplx> out;
    out.value = pref * r.value;
    out.error_estimate = std::abs(pref) * r.error_estimate;
    out.evaluations = r.evaluations;
    if (near_circle)  // slow-convergence flag: widen the reported bound
        out.error_estimate = std::max(out.error_estimate, 1e-8 * std::abs(out.value));
    return out;
}

inline cplx fd_integral(const lauricella_spec& spec, double tol = 1e-8) {
    return fd_integral_result(spec, tol).value;
}

/// When c = b_1 + ... + b_n the last argument can be pivoted away:
///   F_D^(n)(a; b; c | x) = (1 - x_n)^(-a) F_D^(n-1)(a; b_1..b_{n-1}; c | x')
/// with x'_i = (x_i - x_n) / (1 - x_n).  The surviving exponents keep their
/// pairing with x_1..x_{n-1}; the pivot's exponent is absorbed.
struct fd_reduction {
    cplx prefactor;  // (1 - x_n)^(-a), principal branch
    lauricella_spec reduced;
};

inline fd_reduction fd_reduce(const lauricella_spec& spec) {
    const int n = spec.n();
    if (n < 2) throw precondition_error("fd_reduce: needs n >= 2");
    cplx bsum = 0.0;
    for (const cplx& bi : spec.b) bsum += bi;
    if (std::abs(spec.c - bsum) > 1e-12)
        throw precondition_error("fd_reduce: needs c = b_1 + ... + b_n");
    const cplx xn = spec.x.back();
    const cplx om = 1.0 - xn;
    if (om == 0.0) throw singular_pivot_error("fd_reduce: pivot x_n = 1");

    std::vector<cplx> bs(spec.b.begin(), spec.b.end() - 1);
    std::vector<cplx> xs(spec.x.size() - 1);
    for (std::size_t i = 0; i + 1 < spec.x.size(); ++i) xs[i] = (spec.x[i] - xn) / om;
    return {std::pow(om, -spec.a), lauricella_spec(spec.a, std::move(bs), spec.c, std::move(xs))};
}

/// The three fixed F_D^(3) shapes used throughout:
///   H1 = F_D^(3)(1/2; 1/2; 2 | x, y, z)
///   G  = F_D^(3)(1/2; 1/2; 1 | x, y, z)
///   H2 = F_D^(3)(3/2; 1/2; 2 | x, y, z)
enum class h_family { h1, g, h2 };

inline double h_eval(h_family family, double x, double y, double z, double tol = 1e-10) {
    cplx a, c;
    switch (family) {
        case h_family::h1: a = 0.5; c = 2.0; break;
        case h_family::g:  a = 0.5; c = 1.0; break;
        case h_family::h2: a = 1.5; c = 2.0; break;
    }
    auto spec = lauricella_spec::equal_exponents(a, 0.5, c, {cplx(x), cplx(y), cplx(z)});
    const cplx v = fd_integral(spec, tol);
    if (std::fabs(v.imag()) > tol * std::max(1.0, std::fabs(v.real())))
        throw consistency_error("h_eval: non-negligible imaginary residue", v.imag());
    return v.real();
}

}  // namespace hyperell

#endif  // HYPERELL_LAURICELLA_HPP
