#pragma once

#include <stdexcept>
#include <string>

namespace orl {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad OGF text, out-of-range vertex ids, unequal classes.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An oracle was asked to run on an instance larger than its budget.
class BudgetError : public Error {
 public:
  using Error::Error;
};

/// An internal invariant of an algorithm was found broken at runtime.
class InvariantError : public Error {
 public:
  using Error::Error;
};

namespace detail {

[[noreturn]] inline void fail_invariant(const std::string& what) {
  throw InvariantError("invariant violated: " + what);
}

}  // namespace detail
}  // namespace orl
