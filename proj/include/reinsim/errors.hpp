#pragma once

#include <stdexcept>
#include <string>

namespace reinsim {

// Bad or inconsistent user configuration (CLI exit code 1).
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Numerical failure: blow-up, quadrature non-convergence, overflow (CLI exit code 2).
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

// The first-order condition has no sign change up to the bracket cap, i.e. the
// existence hypothesis for an interior optimal retention fails for this model.
class NoInteriorRootError : public NumericalError {
public:
    explicit NoInteriorRootError(const std::string& msg) : NumericalError(msg) {}
};

} // namespace reinsim
