#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace wmb {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A gamma argument landed within the pole threshold of a non-positive integer.
class PoleError : public Error {
public:
  PoleError(const std::string& msg, std::complex<double> where)
      : Error(msg), at(where) {}
  std::complex<double> at;
};

// A left-family pole collides with a right-family pole; the contour integral
// is undefined.
class PinchError : public Error {
public:
  using Error::Error;
};

// The Stirling count of a Barnes integrand predicts no exponential decay
// along vertical lines.
class NoDecayError : public Error {
public:
  using Error::Error;
};

// Quadrature refinement exhausted its cap without meeting the tolerance.
class ConvergenceError : public Error {
public:
  using Error::Error;
};

// A table, grid, enumeration bound or sample set is too small for the
// requested tolerance.
class InsufficientInputError : public Error {
public:
  using Error::Error;
};

// Arguments fall outside the supported region of an operation.
class RegionError : public Error {
public:
  using Error::Error;
};

// Malformed configuration or input file; maps to CLI exit code 2.
class ConfigError : public Error {
public:
  using Error::Error;
};

}  // namespace wmb
