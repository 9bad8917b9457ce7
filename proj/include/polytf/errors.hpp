#pragma once

#include <stdexcept>
#include <string>

namespace polytf {

/// Invalid weight-family parameters (e.g. Jacobi exponents <= -1).
struct ParameterError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Invalid degree window (m > n and friends).
struct WindowError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Argument outside the domain of an operation.
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A stated precondition does not hold (e.g. function not normalized).
struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Numerical failure (non-convergence, lost accuracy).
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace polytf
