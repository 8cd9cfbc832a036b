#pragma once

#include <stdexcept>
#include <string>

namespace qkzlab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A rational function or R-matrix was evaluated at one of its poles.
class PoleEncountered : public Error {
 public:
  using Error::Error;
};

/// exp() was asked for a series whose constant term is not zero.
class NonNilpotentConstantTerm : public Error {
 public:
  using Error::Error;
};

class BadLegIndex : public Error {
 public:
  using Error::Error;
};

/// Exact elimination found no invertible pivot.
class SingularOperator : public Error {
 public:
  using Error::Error;
};

/// A scalar (number, series) without an inverse was inverted.
class NotInvertible : public Error {
 public:
  using Error::Error;
};

/// Malformed input: bad rational literal, duplicated points, bad order, ...
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace qkzlab
