#include "casimir/specfun/signed_log.hpp"

#include <cmath>

#include "casimir/errors.hpp"

namespace casimir::specfun {

SignedLog::SignedLog(int sign, double log_magnitude) {
  if (sign == 0 || log_magnitude == -std::numeric_limits<double>::infinity()) {
    return;
  }
  if (std::isnan(log_magnitude)) {
    throw DomainError("SignedLog: NaN log magnitude");
  }
  sign_ = sign > 0 ? 1 : -1;
  log_magnitude_ = log_magnitude;
}

SignedLog SignedLog::from_value(double value) {
  if (std::isnan(value)) {
    throw DomainError("SignedLog: NaN value");
  }
  if (value == 0.0) {
    return zero();
  }
  return SignedLog(value > 0 ? 1 : -1, std::log(std::fabs(value)));
}

double SignedLog::value() const {
  if (sign_ == 0) {
    return 0.0;
  }
  return sign_ * std::exp(log_magnitude_);
}

SignedLog& SignedLog::operator*=(const SignedLog& rhs) {
  if (sign_ == 0 || rhs.sign_ == 0) {
    *this = zero();
    return *this;
  }
  sign_ *= rhs.sign_;
  log_magnitude_ += rhs.log_magnitude_;
  return *this;
}

SignedLog& SignedLog::operator/=(const SignedLog& rhs) {
  if (rhs.sign_ == 0) {
    throw DomainError("SignedLog: division by zero");
  }
  if (sign_ == 0) {
    return *this;
  }
  sign_ *= rhs.sign_;
  log_magnitude_ -= rhs.log_magnitude_;
  return *this;
}

}  // namespace casimir::specfun
