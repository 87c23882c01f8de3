#pragma once

#include <stdexcept>
#include <string>

namespace contestlab {

// Bad inputs: malformed configs, violated preconditions, infeasible targets.
// Maps to CLI exit code 1.
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// The math gave up: quadrature budget exhausted, root not bracketed,
// non-monotone cost curve, undefined derivative. Maps to CLI exit code 2.
struct NumericalError : std::runtime_error {
    explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace contestlab
