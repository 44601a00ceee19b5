#pragma once

#include <stdexcept>
#include <string>

namespace lcmlat {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad cover relation, duplicate values, a set that is not
/// GCD closed, unparsable files.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Well-formed input that violates an operation's precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Trial division gave up before fully factoring a number.
class BudgetExceededError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// A sign could not be certified even at the maximum working precision.
class UncertifiableError : public Error {
 public:
  using Error::Error;
};

}  // namespace lcmlat
