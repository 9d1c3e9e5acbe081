#pragma once

#include <stdexcept>
#include <string>

namespace xychain {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parameter violates the documented domain (gamma outside [0,1], T < 0, odd N, ...).
class InvalidParameter : public Error {
 public:
  using Error::Error;
};

/// The requested quantity is infinite (susceptibility at the critical point, T = 0).
class CriticalDivergence : public Error {
 public:
  using Error::Error;
};

/// The integrand produced NaN or Inf at an evaluation node.
class NonFiniteIntegrand : public Error {
 public:
  NonFiniteIntegrand(const std::string& what, double abscissa)
      : Error(what), abscissa_(abscissa) {}
  double abscissa() const noexcept { return abscissa_; }

 private:
  double abscissa_;
};

/// The pseudocritical coarse scan peaked at a bracket endpoint.
class NoInteriorMaximum : public Error {
 public:
  using Error::Error;
};

/// A fit cannot be formed (too few points, zero abscissa spread, log of zero, zero slope).
class DegenerateFit : public Error {
 public:
  using Error::Error;
};

/// Collapse curves do not share enough abscissa support to be compared.
class InsufficientOverlap : public Error {
 public:
  using Error::Error;
};

}  // namespace xychain
