#pragma once

#include <stdexcept>
#include <string>

namespace casimir {

// Base of every error raised by the library. The C API maps each subclass to
// a distinct status code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation (z <= 0, l < 1, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A truncated sum or quadrature hit its hard cap before meeting tolerance.
// Carries the partial value so callers can still report it.
class NonConvergenceError : public Error {
 public:
  NonConvergenceError(const std::string& what, double partial_value,
                      double error_estimate, long l_used, long p_used)
      : Error(what),
        partial_value_(partial_value),
        error_estimate_(error_estimate),
        l_used_(l_used),
        p_used_(p_used) {}

  double partial_value() const noexcept { return partial_value_; }
  double error_estimate() const noexcept { return error_estimate_; }
  long l_used() const noexcept { return l_used_; }
  long p_used() const noexcept { return p_used_; }

 private:
  double partial_value_;
  double error_estimate_;
  long l_used_;
  long p_used_;
};

// 1 - M_l is below what double precision can resolve.
class PrecisionLossError : public Error {
 public:
  using Error::Error;
};

// Asymptotic series evaluated outside its small-epsilon regime.
class OutOfRegimeError : public Error {
 public:
  using Error::Error;
};

class UnsupportedDimensionError : public Error {
 public:
  using Error::Error;
};

// Evaluation at a pole of a Gamma-function prefactor.
class PoleError : public Error {
 public:
  using Error::Error;
};

}  // namespace casimir
