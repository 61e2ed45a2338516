#pragma once

#include <stdexcept>

namespace fragkin {

/// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid argument, malformed configuration, or schema violation.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Checked 128-bit integer arithmetic would wrap.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// An enumeration would exceed the configured configuration budget.
class BudgetError : public Error {
 public:
  using Error::Error;
};

/// Numeric failure: non-finite value, undefined probability, integrator breakdown.
class NumericError : public Error {
 public:
  using Error::Error;
};

}  // namespace fragkin
