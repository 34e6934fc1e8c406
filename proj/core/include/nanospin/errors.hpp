#pragma once

#include <stdexcept>
#include <string>

namespace nanospin {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A density matrix failed Hermiticity, trace or positivity checks.
class InvalidInputError : public Error {
 public:
  using Error::Error;
};

/// An argument lies outside the domain of a closed-form expression.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Closed-form radicands came out clearly negative: the parameters do not
/// describe a physical state.
class InconsistentParametersError : public Error {
 public:
  using Error::Error;
};

/// Requested problem exceeds a configured size limit (dense oracle).
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

/// Malformed user configuration (sweep ranges, CLI values).
class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace nanospin
