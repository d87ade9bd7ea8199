#pragma once

#include <stdexcept>
#include <string>

namespace fraclab {

// Invalid parameters, malformed configs, violated preconditions.
struct ConfigError : std::invalid_argument {
    explicit ConfigError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Numerical failure: divergence, non-positive-definite covariance,
// quadrature non-convergence.
struct NumericalError : std::runtime_error {
    explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

// Filesystem/output failures, reported with path context.
struct IoError : std::runtime_error {
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace fraclab
