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

#ifndef HYPERELL_REPORT_HPP
#define HYPERELL_REPORT_HPP

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace hyperell {

namespace detail {

// All reported numbers are fixed at 15 significant digits; rounding them at
// storage time makes print -> parse an exact round trip.
inline double round15(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.14e", v);
    return std::strtod(buf, nullptr);
}

inline std::string sci15(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.14e", v);
    return buf;
}

inline std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace detail

/// One verified equality/bound.  pass holds exactly when error <= tol on the
/// stored (rounded) values.
struct check_row {
    std::string id;
    double lhs = 0.0;
    double rhs = 0.0;
    double error = 0.0;
    double tol = 0.0;
    bool pass = false;

    bool operator==(const check_row&) const = default;
};

inline check_row make_check(std::string id, double lhs, double rhs, double error, double tol) {
    // JSON has no inf/nan; a non-finite value is capped at a sentinel that
    // still fails every tolerance
    auto fin = [](double v) { return std::isfinite(v) ? v : 1e300; };
    check_row row;
    row.id = std::move(id);
    row.lhs = detail::round15(fin(lhs));
    row.rhs = detail::round15(fin(rhs));
    row.error = detail::round15(fin(error));
    row.tol = detail::round15(tol);
    row.pass = row.error <= row.tol;
    return row;
}

/// A suite run: configuration echo, per-check rows, wall time.
struct report {
    std::string suite;
    double tol = 0.0;
    std::uint64_t seed = 0;
    int jobs = 1;
    std::vector<check_row> checks;
    double elapsed_ms = 0.0;

    bool operator==(const report&) const = default;

    bool all_pass() const {
        for (const check_row& c : checks)
            if (!c.pass) return false;
        return true;
    }

    std::size_t failed_count() const {
        std::size_t n = 0;
        for (const check_row& c : checks)
            if (!c.pass) ++n;
        return n;
    }
};

inline std::string to_json_string(const report& r) {
    std::ostringstream os;
    os << "{\"suite\":" << nlohmann::json(r.suite).dump() << ",\"config\":{\"tol\":"
       << detail::sci15(r.tol) << ",\"seed\":" << r.seed << ",\"jobs\":" << r.jobs
       << "},\"checks\":[";
    for (std::size_t i = 0; i < r.checks.size(); ++i) {
        const check_row& c = r.checks[i];
        if (i) os << ',';
        os << "{\"id\":" << nlohmann::json(c.id).dump() << ",\"lhs\":" << detail::sci15(c.lhs)
           << ",\"rhs\":" << detail::sci15(c.rhs) << ",\"error\":" << detail::sci15(c.error)
           << ",\"tol\":" << detail::sci15(c.tol) << ",\"pass\":" << (c.pass ? "true" : "false")
           << '}';
    }
    os << "],\"elapsed_ms\":" << detail::sci15(r.elapsed_ms) << '}';
    return os.str();
}

inline report report_from_json(const std::string& text) {
    const nlohmann::json j = nlohmann::json::parse(text);
    report r;
    r.suite = j.at("suite").get<std::string>();
    r.tol = j.at("config").at("tol").get<double>();
    r.seed = j.at("config").at("seed").get<std::uint64_t>();
    r.jobs = j.at("config").at("jobs").get<int>();
    for (const auto& jc : j.at("checks")) {
        check_row c;
        c.id = jc.at("id").get<std::string>();
        c.lhs = jc.at("lhs").get<double>();
        c.rhs = jc.at("rhs").get<double>();
        c.error = jc.at("error").get<double>();
        c.tol = jc.at("tol").get<double>();
        c.pass = jc.at("pass").get<bool>();
        r.checks.push_back(std::move(c));
    }
    r.elapsed_ms = j.at("elapsed_ms").get<double>();
    return r;
}

inline std::string to_csv(const report& r) {
    std::ostringstream os;
    os << "id,lhs,rhs,error,tol,pass\n";
    for (const check_row& c : r.checks) {
        os << detail::csv_quote(c.id) << ',' << detail::sci15(c.lhs) << ','
           << detail::sci15(c.rhs) << ',' << detail::sci15(c.error) << ','
           << detail::sci15(c.tol) << ',' << (c.pass ? "true" : "false") << "\n";
    }
    return os.str();
}

inline std::string to_text(const report& r) {
    std::ostringstream os;
    os << "suite " << r.suite << "  (tol " << detail::sci15(r.tol) << ", seed " << r.seed
       << ", jobs " << r.jobs << ")\n";
    for (const check_row& c : r.checks) {
        char line[256];
        std::snprintf(line, sizeof line, "  %-44s %s  err %.5e  tol %.5e\n", c.id.c_str(),
                      c.pass ? "pass" : "FAIL", c.error, c.tol);
        os << line;
    }
    char tail[128];
    std::snprintf(tail, sizeof tail, "%zu checks, %zu failed, %.1f ms\n", r.checks.size(),
                  r.failed_count(), r.elapsed_ms);
    os << tail;
    return os.str();
}

}  // namespace hyperell

#endif  // HYPERELL_REPORT_HPP
