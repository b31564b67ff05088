#pragma once

#include <stdexcept>
#include <string>

namespace vortex {

// Base of every error raised by the library. The CLI maps subclasses onto
// process exit codes, so new failure kinds should get their own subclass.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A configuration violates a model invariant (coincident vortices, zero or
// non-finite circulation, empty list).
class InvalidConfiguration : public Error {
 public:
  using Error::Error;
};

// A rational function was evaluated within the exclusion floor of a pole.
class PoleEvaluation : public Error {
 public:
  using Error::Error;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// An iterative method stopped before reaching its tolerance.
class NonConvergence : public Error {
 public:
  using Error::Error;
};

// A polynomial construction produced coincident or multiple roots.
class DegenerateParameters : public Error {
 public:
  using Error::Error;
};

}  // namespace vortex
