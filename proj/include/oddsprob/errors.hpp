#pragma once

#include <stdexcept>
#include <string>

namespace oddsprob {

// Base class for every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid input values: bad odds, shape mismatches, out-of-range arguments.
struct DomainError : Error {
  using Error::Error;
};

// The requested method cannot handle this market shape (e.g. t != 1).
struct UnsupportedMarketError : Error {
  using Error::Error;
};

// An iterative solver ran out of iterations. Carries the last iterate.
struct ConvergenceError : Error {
  ConvergenceError(const std::string& what, double last)
      : Error(what), last_value(last) {}
  double last_value;
};

// Malformed input file: CSV, manifest, corpus or model file.
struct FormatError : Error {
  using Error::Error;
};

// Model fitting failed. Carries the offending parameter value when known.
struct FitError : Error {
  explicit FitError(const std::string& what, double param = 0.0)
      : Error(what), parameter(param) {}
  double parameter;
};

}  // namespace oddsprob
