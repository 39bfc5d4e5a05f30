#pragma once

#include <limits>

namespace casimir::specfun {

// A real number stored as sign * exp(log_magnitude). Products and ratios of
// Bessel functions at large order overflow double precision long before the
// result itself does, so they are formed in this representation.
class SignedLog {
 public:
  SignedLog() = default;  // zero
  SignedLog(int sign, double log_magnitude);

  static SignedLog from_value(double value);
  static SignedLog zero() { return SignedLog{}; }

  int sign() const noexcept { return sign_; }
  double log_magnitude() const noexcept { return log_magnitude_; }
  bool is_zero() const noexcept { return sign_ == 0; }

  // exp(log_magnitude) with the sign applied; may be +-inf or 0 on overflow.
  double value() const;

  SignedLog operator-() const { return SignedLog(-sign_, log_magnitude_); }
  SignedLog& operator*=(const SignedLog& rhs);
  SignedLog& operator/=(const SignedLog& rhs);

  friend SignedLog operator*(SignedLog lhs, const SignedLog& rhs) { return lhs *= rhs; }
  friend SignedLog operator/(SignedLog lhs, const SignedLog& rhs) { return lhs /= rhs; }
  friend bool operator==(const SignedLog&, const SignedLog&) = default;

 private:
  int sign_ = 0;
  double log_magnitude_ = -std::numeric_limits<double>::infinity();
};

}  // namespace casimir::specfun
