#pragma once

#include <stdexcept>
#include <string>

namespace isacnet {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// File could not be read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

/// Input text is not a well-formed network or witness document.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A structural invariant of the network model is violated.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A caller-supplied parameter is outside its documented range.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// A condition that the library guarantees cannot occur did occur
/// (solver breakdown, infeasible LP for an in-range target, ...).
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace isacnet
