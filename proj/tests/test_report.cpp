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

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "hyperell/report.hpp"
#include "hyperell/verify.hpp"

using namespace hyperell;

namespace {

report sample_report() {
    report r;
    r.suite = "sample";
    r.tol = detail::round15(1e-8);
    r.seed = 42;
    r.jobs = 3;
    r.checks.push_back(make_check("alpha.one", 1.0 / 3.0, 0.3333333333333333, 1e-16, 1e-8));
    r.checks.push_back(make_check("beta,quoted \"id\"", 2.0, 3.0, 0.5, 1e-8));
    r.checks.push_back(make_check("gamma.three", -1.25e-4, -1.25e-4, 0.0, 1e-12));
    r.elapsed_ms = detail::round15(12.5);
    return r;
}

}  // namespace

TEST_CASE("pass flag mirrors error vs tolerance") {
    CHECK(make_check("a", 1.0, 1.0, 1e-9, 1e-8).pass);
    CHECK_FALSE(make_check("b", 1.0, 2.0, 1e-7, 1e-8).pass);
    CHECK(make_check("edge", 1.0, 1.0, 1e-8, 1e-8).pass);
    for (const check_row& c : sample_report().checks)
        CHECK(c.pass == (c.error <= c.tol));
}

TEST_CASE("non-finite values are capped so reports stay machine-readable") {
    const double inf = std::numeric_limits<double>::infinity();
    const double nan = std::numeric_limits<double>::quiet_NaN();
    const check_row c = make_check("bad", nan, inf, inf, 1e-8);
    CHECK_FALSE(c.pass);
    CHECK(std::isfinite(c.lhs));
    CHECK(std::isfinite(c.error));

    report r;
    r.suite = "broken";
    r.checks.push_back(c);
    const report back = report_from_json(to_json_string(r));
    CHECK(back == r);
}

TEST_CASE("json report round-trips") {
    const report r = sample_report();
    const std::string text = to_json_string(r);
    const report back = report_from_json(text);
    CHECK(back == r);
    // and printing the parsed report reproduces the same document
    CHECK(to_json_string(back) == text);
}

TEST_CASE("csv report shape") {
    const report r = sample_report();
    const std::string csv = to_csv(r);
    CHECK(csv.rfind("id,lhs,rhs,error,tol,pass\n", 0) == 0);
    // RFC-4180: embedded comma and quotes force quoting with doubled quotes
    CHECK(csv.find("\"beta,quoted \"\"id\"\"\"") != std::string::npos);
    CHECK(csv.find("false") != std::string::npos);
    const std::size_t lines = std::count(csv.begin(), csv.end(), '\n');
    CHECK(lines == 1 + r.checks.size());
}

TEST_CASE("text report marks failures") {
    const std::string text = to_text(sample_report());
    CHECK(text.find("FAIL") != std::string::npos);
    CHECK(text.find("alpha.one") != std::string::npos);
}

TEST_CASE("suite catalogue and defaults") {
    CHECK(suite_names().size() == 6);
    CHECK(suite_default_tol("pi") == 1e-7);
    CHECK(suite_default_tol("reduction") == 1e-8);
    CHECK_THROWS_AS(suite_default_tol("nope"), domain_error);
}

TEST_CASE("legendre suite runs green and is order-stable") {
    verify_options serial;
    serial.jobs = 1;
    const report a = run_suite("legendre", serial);
    CHECK(a.all_pass());
    CHECK(a.checks.size() == 14);

    verify_options parallel;
    parallel.jobs = 4;
    const report b = run_suite("legendre", parallel);
    REQUIRE(a.checks.size() == b.checks.size());
    for (std::size_t i = 0; i < a.checks.size(); ++i) CHECK(a.checks[i] == b.checks[i]);
}

TEST_CASE("continuation suite runs green") {
    const report r = run_suite("continuation");
    CHECK(r.all_pass());
    CHECK(r.checks.size() == 6);
}

TEST_CASE("impossible tolerance yields failing rows and an honest report") {
    verify_options opt;
    opt.tol = 1e-15;  // below what the two-route comparisons can reach
    const report r = run_suite("properties", opt);
    CHECK_FALSE(r.all_pass());
    CHECK(r.failed_count() > 0);
}
