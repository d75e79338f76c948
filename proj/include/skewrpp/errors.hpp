#pragma once

#include <stdexcept>
#include <string>

namespace skewrpp {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller broke an API contract (mismatched truncations, bad arguments).
class UsageError : public Error {
 public:
  using Error::Error;
};

// Argument is well formed but outside the mathematical domain of the operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Request exceeds a configured enumeration cap.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// Input data does not satisfy the invariants of the type being built.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A result that must hold by construction did not; indicates a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace skewrpp
