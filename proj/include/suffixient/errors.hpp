#pragma once

#include <stdexcept>
#include <string>

namespace suffixient {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A letter code outside [0, sigma).
class AlphabetError : public Error {
 public:
  using Error::Error;
};

/// A coordinate or slot outside the current text.
class BoundsError : public Error {
 public:
  using Error::Error;
};

/// A handle that does not name a live item or node.
class HandleError : public Error {
 public:
  using Error::Error;
};

/// An operation called with arguments that violate its contract.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Malformed input stream (e.g. a repeated sentinel).
class InputError : public Error {
 public:
  using Error::Error;
};

/// Operation not permitted in the current state.
class StateError : public Error {
 public:
  using Error::Error;
};

/// An enumeration that would exceed its configured size bound.
class SizeError : public Error {
 public:
  using Error::Error;
};

/// An internal invariant was broken. Never expected in a correct build.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace suffixient
