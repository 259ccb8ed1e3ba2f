#pragma once

#include <stdexcept>
#include <string>

namespace schemekit {

/// Base class of every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

/// Operands live in different rings (or an index is out of a ring's range).
class RingMismatch : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// Raised by cooperative cancellation points when a time budget runs out.
class TimeBudgetExceeded : public Error {
 public:
  TimeBudgetExceeded() : Error("time budget exceeded") {}
};

}  // namespace schemekit
