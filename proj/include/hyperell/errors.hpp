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

#ifndef HYPERELL_ERRORS_HPP
#define HYPERELL_ERRORS_HPP

#include <complex>
#include <stdexcept>
#include <string>

namespace hyperell {

/// Invalid argument outside the mathematical domain of an operation.
class domain_error : public std::domain_error {
public:
    explicit domain_error(const std::string& what) : std::domain_error(what) {}
};

/// An argument lies on the branch cut [1, inf) of the integral representation.
class branch_error : public domain_error {
public:
    explicit branch_error(const std::string& what) : domain_error(what) {}
};

/// Denominator parameter hit a pole (non-positive integer c).
class pole_error : public domain_error {
public:
    explicit pole_error(const std::string& what) : domain_error(what) {}
};

/// A stated precondition between parameters does not hold.
class precondition_error : public domain_error {
public:
    explicit precondition_error(const std::string& what) : domain_error(what) {}
};

/// Reduction pivot x_n = 1 makes the prefactor singular.
class singular_pivot_error : public domain_error {
public:
    explicit singular_pivot_error(const std::string& what) : domain_error(what) {}
};

/// Requested table entry does not exist.
class not_found_error : public std::out_of_range {
public:
    explicit not_found_error(const std::string& what) : std::out_of_range(what) {}
};

/// A value that must be real came back with a non-negligible imaginary part.
class consistency_error : public std::runtime_error {
public:
    consistency_error(const std::string& what, double residual)
        : std::runtime_error(what), residual_(residual) {}
    double residual() const noexcept { return residual_; }

private:
    double residual_;
};

/// Quadrature failed to meet the tolerance within the level cap.
/// Carries the best estimate obtained so far.
class convergence_error : public std::runtime_error {
public:
    convergence_error(const std::string& what, std::complex<double> best,
                      double error_estimate, long evaluations)
        : std::runtime_error(what),
          best_(best),
          error_estimate_(error_estimate),
          evaluations_(evaluations) {}

    std::complex<double> best() const noexcept { return best_; }
    double error_estimate() const noexcept { return error_estimate_; }
    long evaluations() const noexcept { return evaluations_; }

private:
    std::complex<double> best_;
    double error_estimate_;
    long evaluations_;
};

}  // namespace hyperell

#endif  // HYPERELL_ERRORS_HPP
