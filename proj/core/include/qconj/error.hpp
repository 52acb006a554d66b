#pragma once

#include <stdexcept>
#include <string>

namespace qconj {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero in Q(q)") {}
};

/// A precondition on the arguments of an operation was violated.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// An action would leave the weight spaces stored up to the degree cutoff.
class CutoffExceeded : public Error {
 public:
  using Error::Error;
};

/// An internal consistency pin failed (singularity, normalization, centrality).
class ValidationFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace qconj
