#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <string>
#include <vector>

namespace casimir {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

namespace specfun {

// Polynomial with exact rational coefficients, indexed by power. Trailing
// zero coefficients are trimmed so equality is structural.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> coefficients);

  static RationalPolynomial constant(const Rational& c);
  static RationalPolynomial monomial(const Rational& c, std::size_t power);

  // Zero polynomial has degree 0.
  std::size_t degree() const noexcept;
  bool is_zero() const noexcept { return coefficients_.empty(); }
  const std::vector<Rational>& coefficients() const noexcept { return coefficients_; }
  Rational coefficient(std::size_t power) const;

  RationalPolynomial derivative() const;
  // Antiderivative vanishing at 0.
  RationalPolynomial integral() const;
  // Exact division by (x - root); throws DomainError if the remainder is nonzero.
  RationalPolynomial divide_by_linear(const Rational& root) const;

  Rational evaluate(const Rational& x) const;
  double evaluate(double x) const;
  long double evaluate(long double x) const;

  RationalPolynomial& operator+=(const RationalPolynomial& rhs);
  RationalPolynomial& operator-=(const RationalPolynomial& rhs);
  RationalPolynomial& operator*=(const RationalPolynomial& rhs);
  RationalPolynomial& operator*=(const Rational& scalar);

  friend RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial& b) { return a += b; }
  friend RationalPolynomial operator-(RationalPolynomial a, const RationalPolynomial& b) { return a -= b; }
  friend RationalPolynomial operator*(RationalPolynomial a, const RationalPolynomial& b) { return a *= b; }
  friend RationalPolynomial operator*(RationalPolynomial a, const Rational& s) { return a *= s; }
  friend RationalPolynomial operator*(const Rational& s, RationalPolynomial a) { return a *= s; }
  friend bool operator==(const RationalPolynomial& a, const RationalPolynomial& b) {
    return a.coefficients_ == b.coefficients_;
  }

  // Human readable form in the variable `var`, e.g. "1/8*t - 5/24*t^3".
  std::string to_string(const std::string& var = "t") const;

 private:
  void normalize();

  std::vector<Rational> coefficients_;
  std::vector<double> as_double_;
  std::vector<long double> as_long_double_;
};

}  // namespace specfun
}  // namespace casimir
