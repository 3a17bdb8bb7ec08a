#pragma once

#include <stdexcept>
#include <string>

namespace eg {

// Base of the library's error hierarchy; the CLI maps every subclass to
// exit code 2.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Generator argument outside its domain (cycle with n < 3, union with k < 1).
struct DegenerateInput : Error {
  using Error::Error;
};

// An operation was called on inputs violating a documented precondition.
struct PreconditionViolated : Error {
  using Error::Error;
};

// Paired objects disagree on p or q.
struct ShapeMismatch : Error {
  using Error::Error;
};

// Labels are not a bijection onto 1..q.
struct InvalidLabeling : Error {
  using Error::Error;
};

// Malformed text input.
struct ParseError : Error {
  using Error::Error;
};

// Invalid family spec or option combination.
struct ConfigError : Error {
  using Error::Error;
};

// A lift construction produced output that its own verifier rejected. The
// message carries the witness; this firing on any input is a bug report,
// not a user error.
struct ConstructionCheckFailed : Error {
  using Error::Error;
};

}  // namespace eg
