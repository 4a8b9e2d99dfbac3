#pragma once

#include <stdexcept>
#include <string>

namespace trimer {

// Base class for all library failures that map to CLI exit codes.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bad request: invalid flags, config keys, parameter combinations. Exit code 1.
class UsageError : public Error {
public:
    using Error::Error;
};

// A closed-form expression was evaluated outside its validity window.
class PreconditionError : public UsageError {
public:
    using UsageError::UsageError;
};

// Numerical failure: accuracy not reached, eigensolver trouble, degenerate
// coefficients. Exit code 2.
class NumericError : public Error {
public:
    using Error::Error;
};

// Adaptive step size collapsed; carries the time at which it happened.
class IntegrationError : public NumericError {
public:
    IntegrationError(double t, const std::string& what)
        : NumericError(what + " at t = " + std::to_string(t)), failure_time_(t) {}
    double failure_time() const { return failure_time_; }

private:
    double failure_time_;
};

// Requested data does not cover the quantity being computed.
class CoverageError : public NumericError {
public:
    using NumericError::NumericError;
};

// Integer U0/omega: the interaction-ratio sums have a pole there. Exit code 3.
class ResonanceError : public Error {
public:
    using Error::Error;
};

// File system trouble. Exit code 4.
class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace trimer
