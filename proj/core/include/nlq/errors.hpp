// errors.hpp
// Error taxonomy shared by all modules. Everything derives from std::exception
// so callers can catch broadly; the concrete types map onto the CLI exit codes
// (configuration vs. numerical failures).

#pragma once

#include <stdexcept>

namespace nlq {

// A parameter is outside its mathematically valid range.
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Two objects with incompatible register sizes were combined.
struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Harness configuration is inconsistent or incomplete.
struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A probability/trace operation received a state whose norm is not 1.
struct NormError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A state-dependent coefficient hit a vanishing denominator; the evolution
// law is undefined at this state.
struct SingularCoefficient : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Integrator step too coarse for the requested dynamics.
struct StepError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A modelling assumption (e.g. at most one marked input) is violated.
struct AssumptionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace nlq
