#pragma once

#include <stdexcept>

namespace ngq {

// Parameter outside its admissible range (x >= 1, lambda > 1, negative counts, ...).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Fock-space cutoff too small for the requested tail tolerance or moment order.
class TruncationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Quadrature or Monte Carlo failed to reach target_abs_err within the refinement limit.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The state's Gaussian reference is not a thermal state, so the requested
// comparison measure is outside the supported class.
class UnsupportedStateError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A structural invariant (hermiticity, positivity, Q bounds) was violated.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace ngq
