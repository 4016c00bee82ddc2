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

#ifndef HYPERELL_VERIFY_HPP
#define HYPERELL_VERIFY_HPP

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdarg>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <limits>
#include <memory>
#include <mutex>
#include <random>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "hyperell/elliptic.hpp"
#include "hyperell/formulae.hpp"
#include "hyperell/hyperelliptic.hpp"
#include "hyperell/lauricella.hpp"
#include "hyperell/reduction.hpp"
#include "hyperell/report.hpp"
#include "hyperell/singular.hpp"

namespace hyperell {

struct verify_options {
    double tol = 0.0;  // 0 -> per-suite default
    std::uint64_t seed = 42;
    int jobs = 0;  // 0 -> logical cores
};

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"legendre",     "reduction", "pi",
                                                   "continuation", "singular",  "properties"};
    return names;
}

inline double suite_default_tol(const std::string& suite) {
    if (suite == "legendre") return 1e-10;
    if (suite == "reduction") return 1e-8;
    if (suite == "pi") return 1e-7;
    if (suite == "continuation") return 1e-7;
    if (suite == "singular") return 1e-8;
    if (suite == "properties") return 1e-9;
    throw domain_error("unknown suite: " + suite);
}

namespace detail {

using check_task = std::function<check_row()>;

inline double rel_err(double lhs, double rhs) {
    const double scale = std::max(std::fabs(lhs), std::fabs(rhs));
    if (scale == 0.0) return 0.0;
    return std::fabs(lhs - rhs) / scale;
}

inline double rel_err(cplx lhs, cplx rhs) {
    const double scale = std::max(std::abs(lhs), std::abs(rhs));
    if (scale == 0.0) return 0.0;
    return std::abs(lhs - rhs) / scale;
}

inline std::string fmt_id(const char* fmt, ...) {
    char buf[128];
    va_list ap;
    va_start(ap, fmt);
    std::vsnprintf(buf, sizeof buf, fmt, ap);
    va_end(ap);
    return buf;
}

// ---- suite: legendre ------------------------------------------------------

inline void legendre_tasks(std::vector<check_task>& out, double tol) {
    auto shared = std::make_shared<legendre_values>();
    auto once = std::make_shared<std::once_flag>();
    auto values = [shared, once]() -> const legendre_values& {
        std::call_once(*once, [&] { *shared = legendre_showcase(1e-12); });
        return *shared;
    };

    struct route {
        const char* name;
        double legendre_values::* member;
    };
    static constexpr route routes[] = {
        {"direct", &legendre_values::x_direct},   {"elliptic", &legendre_values::x_elliptic},
        {"quartic", &legendre_values::x_quartic}, {"hyper", &legendre_values::x_hyper},
        {"gamma", &legendre_values::x_gamma},
    };
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            out.push_back([values, i, j, tol]() {
                const legendre_values& v = values();
                const double l = v.*(routes[i].member), r = v.*(routes[j].member);
                return make_check(fmt_id("legendre.x.%s_vs_%s", routes[i].name, routes[j].name),
                                  l, r, rel_err(l, r), tol);
            });
    out.push_back([values, tol]() {
        const legendre_values& v = values();
        return make_check("legendre.p192", v.p192_lhs, v.p192_rhs,
                          rel_err(v.p192_lhs, v.p192_rhs), tol * 0.1);
    });
    out.push_back([values, tol]() {
        const legendre_values& v = values();
        return make_check("legendre.p192b", v.p192b_lhs, v.p192b_rhs,
                          rel_err(v.p192b_lhs, v.p192b_rhs), tol * 0.1);
    });
    out.push_back([values, tol]() {
        const legendre_values& v = values();
        return make_check("legendre.z12_even", v.z12_even_lhs, v.z12_even_rhs,
                          rel_err(v.z12_even_lhs, v.z12_even_rhs), tol * 10.0);
    });
    out.push_back([values, tol]() {
        const legendre_values& v = values();
        return make_check("legendre.z12_quartic", v.z12_quartic_lhs, v.z12_quartic_rhs,
                          rel_err(v.z12_quartic_lhs, v.z12_quartic_rhs), tol * 10.0);
    });
}

// ---- suite: reduction -----------------------------------------------------

inline void reduction_tasks(std::vector<check_task>& out, double tol) {
    static constexpr double as[] = {1.5, 2.0, 3.0, 5.0, 10.0};
    static constexpr double bs[] = {0.3, 0.5, 1.0, 1.2};
    for (double a : as)
        for (double b : bs) {
            if (!(a > b) || (a - b) / a < 1e-12) continue;
            for (int idx = 1; idx <= 6; ++idx) {
                out.push_back([a, b, idx, tol]() {
                    const param_pair p(a, b);
                    const double d = hyperelliptic_direct(idx, p, 1e-10);
                    const double u = reduced_u_form(idx, p, 1e-10);
                    return make_check(fmt_id("reduction.i%d.a%04.1f.b%03.1f.u", idx, a, b), d, u,
                                      rel_err(d, u), tol);
                });
                out.push_back([a, b, idx, tol]() {
                    const param_pair p(a, b);
                    const double d = hyperelliptic_direct(idx, p, 1e-10);
                    const double c = elliptic_closed(idx, p);
                    return make_check(fmt_id("reduction.i%d.a%04.1f.b%03.1f.closed", idx, a, b),
                                      d, c, rel_err(d, c), tol);
                });
            }
        }
}

// ---- suite: pi ------------------------------------------------------------

inline void pi_tasks(std::vector<check_task>& out, double tol) {
    static constexpr double as[] = {1.5, 2.0, 3.0};
    static constexpr double bs[] = {0.5, 1.0, 1.3};
    for (double a : as)
        for (double b : bs) {
            if (!(a > b) || (a - b) / a < 1e-12) continue;
            for (int idx = 1; idx <= 6; ++idx)
                out.push_back([a, b, idx, tol]() {
                    const pi_verdict v = pi_estimate(idx, param_pair(a, b), 1e-9);
                    return make_check(fmt_id("pi.i%d.a%03.1f.b%03.1f", idx, a, b), v.pi_value,
                                      std::numbers::pi, v.abs_error, tol);
                });
        }
}

// ---- suite: continuation ---------------------------------------------------

inline void continuation_tasks(std::vector<check_task>& out, double tol) {
    static constexpr std::pair<double, double> pairs[] = {{3.0, 1.0}, {2.0, 1.0}, {5.0, 2.0}};
    for (auto [a, b] : pairs) {
        out.push_back([a, b, tol]() {
            const continuation_values v = continuation_pair(param_pair(a, b), 1e-9);
            return make_check(fmt_id("continuation.a%03.1f.b%03.1f.eq1", a, b), std::abs(v.lhs1),
                              std::abs(v.rhs1), rel_err(v.lhs1, v.rhs1), tol);
        });
        out.push_back([a, b, tol]() {
            const continuation_values v = continuation_pair(param_pair(a, b), 1e-9);
            return make_check(fmt_id("continuation.a%03.1f.b%03.1f.eq2", a, b), std::abs(v.lhs2),
                              std::abs(v.rhs2), rel_err(v.lhs2, v.rhs2), tol);
        });
    }
}

// ---- suite: singular -------------------------------------------------------

inline void singular_tasks(std::vector<check_task>& out, double tol) {
    for (const singular_entry& e : detail::singular_table()) {
        out.push_back([e, tol]() {
            const double s = lambda_solver(double(e.n)).k();
            return make_check(fmt_id("singular.solver.n%02d", e.n), s, e.lambda_closed,
                              std::fabs(s - e.lambda_closed), tol * 1e-3);
        });
    }
    for (int n = 1; n <= 40; ++n) {
        out.push_back([n, tol]() {
            const double t = theta_modulus(double(n)).k();
            const double s = lambda_solver(double(n)).k();
            return make_check(fmt_id("singular.theta.n%02d", n), t, s, std::fabs(t - s),
                              tol * 1e-3);
        });
    }
    for (const singular_entry& e : detail::singular_table()) {
        out.push_back([e, tol]() {
            const ratio_values r = ratio_check(param_pair(e.ab_ratio, 1.0), 1e-10);
            return make_check(fmt_id("singular.ratio.n%02d.quozi", e.n), r.via_quozi, r.direct,
                              rel_err(r.via_quozi, r.direct), tol);
        });
        out.push_back([e, tol]() {
            const ratio_values r = ratio_check(param_pair(e.ab_ratio, 1.0), 1e-10);
            return make_check(fmt_id("singular.ratio.n%02d.quozi2", e.n), r.via_quozi2, r.direct,
                              rel_err(r.via_quozi2, r.direct), tol);
        });
        out.push_back([e, tol]() {
            const ratio_values r = ratio_check(param_pair(e.ab_ratio, 1.0), 1e-10);
            const double root = std::sqrt(double(e.n));
            return make_check(fmt_id("singular.ratio.n%02d.sqrt_n", e.n), r.direct, root,
                              rel_err(r.direct, root), tol);
        });
    }
    for (const identity_case& c : detail::identity_table()) {
        out.push_back([c, tol]() {
            const identity_values v =
                singular_identity(c.order, c.family, 1e-10);
            const char* fam = c.family == h_family::h1 ? "h1" : "h2";
            return make_check(fmt_id("singular.identity.%s.n%02d", fam, c.order), v.lhs, v.rhs,
                              rel_err(v.lhs, v.rhs), tol);
        });
    }
}

// ---- suite: properties -----------------------------------------------------

inline param_pair random_pair(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.05, 10.0);
    for (;;) {
        double a = u(rng), b = u(rng);
        if (a < b) std::swap(a, b);
        if (a > b && (a - b) / a > 1e-6) return param_pair(a, b);
    }
}

inline cplx random_in_disc(std::mt19937_64& rng, double radius) {
    std::uniform_real_distribution<double> ur(0.0, radius), ua(0.0, 2.0 * std::numbers::pi);
    const double r = ur(rng), t = ua(rng);
    return {r * std::cos(t), r * std::sin(t)};
}

inline void property_tasks(std::vector<check_task>& out, double tol, std::uint64_t seed) {
    out.push_back([tol, seed]() {
        std::mt19937_64 rng(seed ^ 0x636f6d70ULL);
        double worst = 0.0;
        for (int i = 0; i < 1000; ++i) {
            const elliptic_pair e = modulus_pair(random_pair(rng));
            const double kp = e.k_plus.k(), km = e.k_minus.k();
            worst = std::max(worst, std::fabs(kp * kp + km * km - 1.0));
        }
        return make_check("properties.complementarity", worst, 0.0, worst, tol * 1e-5);
    });
    out.push_back([tol, seed]() {
        std::mt19937_64 rng(seed ^ 0x6c616e64ULL);
        std::uniform_real_distribution<double> uk(0.0, 0.999);
        double worst = 0.0;
        for (int i = 0; i < 1000; ++i) {
            const modulus m(uk(rng));
            const double lhs = complete_K(m);
            const landen_step st = landen_descend(m);
            const double rhs = st.factor * complete_K(st.k_new);
            worst = std::max(worst, std::fabs(lhs - rhs) / lhs);
        }
        return make_check("properties.landen_invariance", worst, 0.0, worst, tol * 1e-3);
    });
    out.push_back([tol, seed]() {
        std::mt19937_64 rng(seed ^ 0x726f7574ULL);
        std::uniform_real_distribution<double> ub(0.05, 2.5);
        double worst = 0.0;
        for (int i = 0; i < 200; ++i) {
            const int n = 1 + (i % 4);
            std::uniform_real_distribution<double> uA(0.1, 2.5);
            const double a = uA(rng);
            std::uniform_real_distribution<double> uC(a + 0.05, 2.95);
            const double c = uC(rng);
            std::vector<cplx> b(static_cast<std::size_t>(n)), x(static_cast<std::size_t>(n));
            for (int k = 0; k < n; ++k) {
                b[static_cast<std::size_t>(k)] = ub(rng);
                x[static_cast<std::size_t>(k)] = random_in_disc(rng, 0.8);
            }
            const lauricella_spec spec(a, b, c, x);
            const cplx s = fd_series(spec, 1e-12);
            const cplx q = fd_integral(spec, 1e-11);
            worst = std::max(worst, rel_err(s, q));
        }
        return make_check("properties.fd_route_agreement", worst, 0.0, worst, tol);
    });
    out.push_back([tol, seed]() {
        std::mt19937_64 rng(seed ^ 0x72656475ULL);
        std::uniform_real_distribution<double> ub(0.2, 1.2), ux(-0.9, 0.9), ua(0.1, 0.9);
        double worst = 0.0;
        for (int i = 0; i < 60; ++i) {
            const int n = 2 + (i % 3);
            std::vector<cplx> b(static_cast<std::size_t>(n)), x(static_cast<std::size_t>(n));
            cplx csum = 0.0;
            for (int k = 0; k < n; ++k) {
                b[static_cast<std::size_t>(k)] = ub(rng);
                csum += b[static_cast<std::size_t>(k)];
                x[static_cast<std::size_t>(k)] = ux(rng);
            }
            const double a = ua(rng) * (csum.real() - 0.1);
            const lauricella_spec spec(a, b, csum, x);
            const cplx whole = fd_integral(spec, 1e-11);
            const fd_reduction red = fd_reduce(spec);
            const cplx via = red.prefactor * fd_integral(red.reduced, 1e-11);
            worst = std::max(worst, rel_err(whole, via));
        }
        return make_check("properties.fd_reduce_preservation", worst, 0.0, worst, tol);
    });
    out.push_back([tol, seed]() {
        std::mt19937_64 rng(seed ^ 0x636f6e6aULL);
        std::uniform_real_distribution<double> ub(0.1, 2.0);
        double worst = 0.0;
        for (int i = 0; i < 50; ++i) {
            const int half = 1 + (i % 2);
            const int n = 2 * half;
            std::vector<cplx> b(static_cast<std::size_t>(n)), x(static_cast<std::size_t>(n));
            for (int k = 0; k < half; ++k) {
                const double bk = ub(rng);
                const cplx xk = random_in_disc(rng, 0.85);
                b[static_cast<std::size_t>(2 * k)] = bk;
                b[static_cast<std::size_t>(2 * k + 1)] = bk;
                x[static_cast<std::size_t>(2 * k)] = xk;
                x[static_cast<std::size_t>(2 * k + 1)] = std::conj(xk);
            }
            std::uniform_real_distribution<double> uA(0.1, 2.0);
            const double a = uA(rng);
            std::uniform_real_distribution<double> uC(a + 0.1, 3.0);
            const lauricella_spec spec(a, b, uC(rng), x);
            const cplx v = fd_integral(spec, 1e-11);
            worst = std::max(worst, std::fabs(v.imag()) / std::max(1.0, std::abs(v)));
        }
        return make_check("properties.conjugation_realness", worst, 0.0, worst, tol * 0.1);
    });
    out.push_back([tol, seed]() {
        std::mt19937_64 rng(seed ^ 0x7065726dULL);
        std::uniform_real_distribution<double> ub(0.1, 2.0);
        double worst = 0.0;
        for (int i = 0; i < 50; ++i) {
            const int n = 2 + (i % 3);
            std::vector<cplx> b(static_cast<std::size_t>(n)), x(static_cast<std::size_t>(n));
            for (int k = 0; k < n; ++k) {
                b[static_cast<std::size_t>(k)] = ub(rng);
                x[static_cast<std::size_t>(k)] = random_in_disc(rng, 0.8);
            }
            std::uniform_real_distribution<double> uA(0.1, 2.0);
            const double a = uA(rng);
            std::uniform_real_distribution<double> uC(a + 0.1, 3.0);
            const double c = uC(rng);
            const lauricella_spec spec(a, b, c, x);
            const cplx v1 = fd_integral(spec, 1e-11);
            std::vector<std::size_t> perm(static_cast<std::size_t>(n));
            for (std::size_t k = 0; k < perm.size(); ++k) perm[k] = k;
            std::shuffle(perm.begin(), perm.end(), rng);
            std::vector<cplx> pb(b.size()), px(x.size());
            for (std::size_t k = 0; k < perm.size(); ++k) {
                pb[k] = b[perm[k]];
                px[k] = x[perm[k]];
            }
            const cplx v2 = fd_integral(lauricella_spec(a, pb, c, px), 1e-11);
            worst = std::max(worst, rel_err(v1, v2));
        }
        return make_check("properties.permutation_symmetry", worst, 0.0, worst, tol * 1e-3);
    });
}

inline std::vector<check_task> build_suite(const std::string& suite, double tol,
                                           std::uint64_t seed) {
    std::vector<check_task> tasks;
    if (suite == "legendre")
        legendre_tasks(tasks, tol);
    else if (suite == "reduction")
        reduction_tasks(tasks, tol);
    else if (suite == "pi")
        pi_tasks(tasks, tol);
    else if (suite == "continuation")
        continuation_tasks(tasks, tol);
    else if (suite == "singular")
        singular_tasks(tasks, tol);
    else if (suite == "properties")
        property_tasks(tasks, tol, seed);
    else
        throw domain_error("unknown suite: " + suite);
    return tasks;
}

}  // namespace detail

/// Run one suite (or "all") across a worker pool.  Checks are independent;
/// results are collected and sorted by check id, so output ordering does not
/// depend on the execution interleaving.  A check that throws is reported as
/// a failed row with infinite error.
inline report run_suite(const std::string& suite, verify_options opt = {}) {
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<detail::check_task> tasks;
    if (suite == "all") {
        for (const std::string& s : suite_names()) {
            const double tol = opt.tol > 0.0 ? opt.tol : suite_default_tol(s);
            auto part = detail::build_suite(s, tol, opt.seed);
            for (auto& t : part) tasks.push_back(std::move(t));
        }
    } else {
        const double tol = opt.tol > 0.0 ? opt.tol : suite_default_tol(suite);
        tasks = detail::build_suite(suite, tol, opt.seed);
    }

    int jobs = opt.jobs > 0 ? opt.jobs : int(std::thread::hardware_concurrency());
    if (jobs < 1) jobs = 1;
    jobs = std::min<int>(jobs, int(tasks.size()));

    std::vector<check_row> rows(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            try {
                rows[i] = tasks[i]();
            } catch (const std::exception& e) {
                rows[i] = make_check("exception." + std::string(e.what()), 0.0, 0.0,
                                     std::numeric_limits<double>::infinity(), 0.0);
            }
        }
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(jobs));
        for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
        for (std::thread& th : pool) th.join();
    }
    std::sort(rows.begin(), rows.end(),
              [](const check_row& a, const check_row& b) { return a.id < b.id; });

    report r;
    r.suite = suite;
    r.tol = detail::round15(opt.tol > 0.0 ? opt.tol
                                          : (suite == "all" ? 0.0 : suite_default_tol(suite)));
    r.seed = opt.seed;
    r.jobs = jobs;
    r.checks = std::move(rows);
    const auto t1 = std::chrono::steady_clock::now();
    r.elapsed_ms =
        detail::round15(std::chrono::duration<double, std::milli>(t1 - t0).count());
    return r;
}

}  // namespace hyperell

#endif  // HYPERELL_VERIFY_HPP
