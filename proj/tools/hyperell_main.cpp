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

// hyperell: evaluate the library's operations and run the verification
// suites from the command line.
//
//   hyperell eval <target> [key=value ...]
//   hyperell verify <suite> [--tol T] [--format text|json|csv] [--out FILE]
//                           [--jobs N] [--seed S]

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hyperell/hyperell.hpp"

namespace {

using hyperell::cplx;

std::string num15(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

std::string num15(cplx v) {
    std::string s = num15(v.real());
    s += v.imag() < 0 ? " - " : " + ";
    s += num15(std::fabs(v.imag()));
    s += "i";
    return s;
}

struct kv_args {
    std::map<std::string, std::string> raw;

    bool has(const std::string& key) const { return raw.count(key) != 0; }

    const std::string& get(const std::string& key) const {
        auto it = raw.find(key);
        if (it == raw.end())
            throw hyperell::domain_error("missing required argument '" + key + "='");
        return it->second;
    }

    double num(const std::string& key) const {
        const std::string& s = get(key);
        std::size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size())
            throw hyperell::domain_error("argument '" + key + "' is not a number: " + s);
        return v;
    }

    double num_or(const std::string& key, double fallback) const {
        return has(key) ? num(key) : fallback;
    }

    int integer(const std::string& key) const {
        const double v = num(key);
        const int i = int(v);
        if (double(i) != v)
            throw hyperell::domain_error("argument '" + key + "' must be an integer");
        return i;
    }
};

kv_args parse_kv(const std::vector<std::string>& items) {
    kv_args out;
    for (const std::string& item : items) {
        const std::size_t eq = item.find('=');
        if (eq == std::string::npos || eq == 0)
            throw hyperell::domain_error("expected key=value, got '" + item + "'");
        out.raw[item.substr(0, eq)] = item.substr(eq + 1);
    }
    return out;
}

// Accepts "1.5", "2i", "1+2i", "1-2i", "i", "-i".
cplx parse_complex(std::string s) {
    if (s.empty()) throw hyperell::domain_error("empty complex literal");
    auto parse_part = [](const std::string& t) -> double {
        if (t.empty() || t == "+") return 1.0;
        if (t == "-") return -1.0;
        std::size_t pos = 0;
        const double v = std::stod(t, &pos);
        if (pos != t.size()) throw hyperell::domain_error("bad numeric part: " + t);
        return v;
    };
    if (s.back() == 'i' || s.back() == 'I' || s.back() == 'j') {
        s.pop_back();
        // split off a trailing signed real part if present
        for (std::size_t i = s.size(); i-- > 1;) {
            const char c = s[i];
            if ((c == '+' || c == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
                return {parse_part(s.substr(0, i)), parse_part(s.substr(i))};
            }
        }
        return {0.0, parse_part(s)};
    }
    return {parse_part(s), 0.0};
}

std::vector<cplx> parse_complex_list(const std::string& s) {
    std::vector<cplx> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_complex(item));
    if (out.empty()) throw hyperell::domain_error("empty argument list");
    return out;
}

hyperell::h_family parse_family(const std::string& s) {
    if (s == "H1" || s == "h1") return hyperell::h_family::h1;
    if (s == "G" || s == "g") return hyperell::h_family::g;
    if (s == "H2" || s == "h2") return hyperell::h_family::h2;
    throw hyperell::domain_error("family must be H1, G or H2");
}

int run_eval(const std::string& target, const kv_args& args) {
    using namespace hyperell;
    if (target == "K") {
        std::cout << "K = " << num15(complete_K(modulus(args.num("k")))) << "\n";
    } else if (target == "Kpair") {
        const elliptic_pair e = modulus_pair(param_pair(args.num("a"), args.num("b")));
        std::cout << "k_plus  = " << num15(e.k_plus.k()) << "\n"
                  << "k_minus = " << num15(e.k_minus.k()) << "\n"
                  << "K_plus  = " << num15(e.K_plus) << "\n"
                  << "K_minus = " << num15(e.K_minus) << "\n";
    } else if (target == "I_direct") {
        const auto r = hyperelliptic_direct_result(
            args.integer("index"), param_pair(args.num("a"), args.num("b")),
            args.num_or("tol", 1e-10));
        std::cout << "I = " << num15(r.value) << "  (error estimate " << num15(r.error_estimate)
                  << ", " << r.evaluations << " evaluations)\n";
    } else if (target == "I_closed") {
        std::cout << "I = "
                  << num15(elliptic_closed(args.integer("index"),
                                           param_pair(args.num("a"), args.num("b"))))
                  << "\n";
    } else if (target == "I_u") {
        std::cout << "I = "
                  << num15(reduced_u_form(args.integer("index"),
                                          param_pair(args.num("a"), args.num("b")),
                                          args.num_or("tol", 1e-10)))
                  << "\n";
    } else if (target == "I_lauricella") {
        std::cout << "I = "
                  << num15(lauricella_form(args.integer("index"),
                                           param_pair(args.num("a"), args.num("b")),
                                           args.num_or("tol", 1e-9)))
                  << "\n";
    } else if (target == "fd") {
        const auto spec = lauricella_spec::equal_exponents(
            parse_complex(args.get("a")), parse_complex(args.get("b")),
            parse_complex(args.get("c")), parse_complex_list(args.get("x")));
        if (args.has("route") && args.get("route") == "series") {
            std::cout << "F_D = " << num15(fd_series(spec, args.num_or("tol", 1e-12))) << "\n";
        } else {
            const auto r = fd_integral_result(spec, args.num_or("tol", 1e-8));
            std::cout << "F_D = " << num15(r.value) << "  (error estimate "
                      << num15(r.error_estimate) << ", " << r.evaluations
                      << " evaluations)\n";
        }
    } else if (target == "2f1") {
        std::cout << "2F1 = "
                  << num15(gauss_2f1(parse_complex(args.get("a")), parse_complex(args.get("b")),
                                     parse_complex(args.get("c")), parse_complex(args.get("x")),
                                     args.num_or("tol", 1e-15)))
                  << "\n";
    } else if (target == "pi") {
        const pi_verdict v =
            pi_estimate(args.integer("index"), param_pair(args.num("a"), args.num("b")),
                        args.num_or("tol", 1e-9));
        std::cout << "pi = " << num15(v.pi_value) << "  (|error| = " << num15(v.abs_error)
                  << ")\n";
    } else if (target == "lambda") {
        std::cout << "lambda* = " << num15(lambda_solver(args.num("n")).k()) << "\n";
    } else if (target == "theta") {
        std::cout << "k = " << num15(theta_modulus(args.num("n")).k()) << "\n";
    } else if (target == "ratio") {
        const ratio_values r =
            ratio_check(param_pair(args.num("a"), args.num("b")), args.num_or("tol", 1e-10));
        std::cout << "K+/K- direct     = " << num15(r.direct) << "\n"
                  << "K+/K- via H1/G   = " << num15(r.via_quozi) << "\n"
                  << "K+/K- via H2/G   = " << num15(r.via_quozi2) << "\n";
    } else if (target == "identity") {
        const identity_values v =
            singular_identity(args.integer("order"), parse_family(args.get("family")),
                              args.num_or("tol", 1e-10));
        std::cout << "lhs = " << num15(v.lhs) << "\nrhs = " << num15(v.rhs)
                  << "\nR   = " << num15(v.r) << "\n";
    } else {
        std::cerr << "unknown eval target '" << target << "'\n"
                  << "targets: K Kpair I_direct I_closed I_u I_lauricella fd 2f1 pi lambda "
                     "theta ratio identity\n";
        return 2;
    }
    return 0;
}

int run_verify(const std::string& suite, double tol, const std::string& format,
               const std::string& out_path, int jobs, std::uint64_t seed) {
    using namespace hyperell;
    bool known = suite == "all";
    for (const std::string& s : suite_names()) known = known || s == suite;
    if (!known) {
        std::cerr << "unknown suite '" << suite << "'; use legendre, reduction, pi, "
                  << "continuation, singular, properties or all\n";
        return 2;
    }

    verify_options opt;
    opt.tol = tol;
    opt.seed = seed;
    opt.jobs = jobs;
    const report r = run_suite(suite, opt);

    std::string body;
    if (format == "json")
        body = to_json_string(r);
    else if (format == "csv")
        body = to_csv(r);
    else
        body = to_text(r);

    if (!out_path.empty()) {
        std::ofstream of(out_path);
        if (!of) {
            std::cerr << "cannot open output file " << out_path << "\n";
            return 2;
        }
        of << body;
    } else {
        std::cout << body;
    }

    if (!r.all_pass()) {
        std::cerr << "failed checks:\n";
        for (const check_row& c : r.checks)
            if (!c.pass)
                std::cerr << "  " << c.id << "  error " << num15(c.error) << " > tol "
                          << num15(c.tol) << "\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hyperelliptic-to-elliptic reductions, Lauricella F_D and "
                 "singular-moduli verification"};
    app.require_subcommand(1);

    auto* eval = app.add_subcommand("eval", "evaluate one operation");
    std::string target;
    std::vector<std::string> kv;
    eval->add_option("target", target, "operation name")->required();
    eval->add_option("args", kv, "key=value arguments");

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite, format = "text", out_path;
    double tol = 0.0;
    int jobs = 0;
    std::uint64_t seed = 42;
    verify->add_option("suite", suite, "legendre|reduction|pi|continuation|singular|properties|all")
        ->required();
    verify->add_option("--tol", tol, "override the per-suite base tolerance");
    verify->add_option("--format", format, "text|json|csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    verify->add_option("--out", out_path, "write the report to a file");
    verify->add_option("--jobs", jobs, "worker threads (default: logical cores)");
    verify->add_option("--seed", seed, "seed for randomized property suites");

    CLI11_PARSE(app, argc, argv);

    try {
        if (eval->parsed()) return run_eval(target, parse_kv(kv));
        return run_verify(suite, tol, format, out_path, jobs, seed);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
