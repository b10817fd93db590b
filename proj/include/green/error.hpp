#pragma once

#include <stdexcept>
#include <string>

namespace green {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Incompatible tensor dimensions (rank or extent mismatch).
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Invalid parameter value (nonpositive sigma, bad fold count, ...).
class ValueError : public Error {
 public:
  using Error::Error;
};

/// Out-of-range index (class labels, tensor coordinates).
class IndexError : public Error {
 public:
  using Error::Error;
};

/// Operation not valid in the object's current state (double freeze, ...).
class StateError : public Error {
 public:
  using Error::Error;
};

/// Violated API contract (stale tape, non-scalar loss, ...).
class ContractError : public Error {
 public:
  using Error::Error;
};

/// Malformed file content (checkpoint or dataset parsing).
class FormatError : public Error {
 public:
  using Error::Error;
};

/// Filesystem failure (unreadable or unwritable path).
class IoError : public Error {
 public:
  using Error::Error;
};

/// Non-finite value where a finite one is required (NaN loss abort).
class NumericError : public Error {
 public:
  using Error::Error;
};

}  // namespace green
