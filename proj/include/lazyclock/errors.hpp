#pragma once

#include <stdexcept>
#include <string>

namespace lazyclock {

// Numerical failure (as opposed to a caller-side domain violation, which is
// reported via std::domain_error / std::invalid_argument).
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Adaptive quadrature did not reach the requested tolerance.
class QuadratureError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

// Root finder was handed an interval without a sign change.
class BracketError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

}  // namespace lazyclock
