#include "casimir/specfun/rational_polynomial.hpp"

#include <sstream>

#include "casimir/errors.hpp"

namespace casimir::specfun {

RationalPolynomial::RationalPolynomial(std::vector<Rational> coefficients)
    : coefficients_(std::move(coefficients)) {
  normalize();
}

RationalPolynomial RationalPolynomial::constant(const Rational& c) {
  return RationalPolynomial(std::vector<Rational>{c});
}

RationalPolynomial RationalPolynomial::monomial(const Rational& c, std::size_t power) {
  std::vector<Rational> coeffs(power + 1);
  coeffs[power] = c;
  return RationalPolynomial(std::move(coeffs));
}

void RationalPolynomial::normalize() {
  while (!coefficients_.empty() && coefficients_.back() == 0) {
    coefficients_.pop_back();
  }
  as_double_.clear();
  as_long_double_.clear();
  as_double_.reserve(coefficients_.size());
  as_long_double_.reserve(coefficients_.size());
  for (const auto& c : coefficients_) {
    as_double_.push_back(c.convert_to<double>());
    as_long_double_.push_back(c.convert_to<long double>());
  }
}

std::size_t RationalPolynomial::degree() const noexcept {
  return coefficients_.empty() ? 0 : coefficients_.size() - 1;
}

Rational RationalPolynomial::coefficient(std::size_t power) const {
  return power < coefficients_.size() ? coefficients_[power] : Rational(0);
}

RationalPolynomial RationalPolynomial::derivative() const {
  if (coefficients_.size() <= 1) {
    return {};
  }
  std::vector<Rational> out(coefficients_.size() - 1);
  for (std::size_t k = 1; k < coefficients_.size(); ++k) {
    out[k - 1] = coefficients_[k] * static_cast<long>(k);
  }
  return RationalPolynomial(std::move(out));
}

RationalPolynomial RationalPolynomial::integral() const {
  std::vector<Rational> out(coefficients_.size() + 1);
  for (std::size_t k = 0; k < coefficients_.size(); ++k) {
    out[k + 1] = coefficients_[k] / static_cast<long>(k + 1);
  }
  return RationalPolynomial(std::move(out));
}

RationalPolynomial RationalPolynomial::divide_by_linear(const Rational& root) const {
  if (coefficients_.empty()) {
    return {};
  }
  // Synthetic division from the top coefficient down.
  const std::size_t n = coefficients_.size();
  std::vector<Rational> quotient(n - 1);
  Rational carry = 0;
  for (std::size_t i = n; i-- > 0;) {
    const Rational value = coefficients_[i] + carry;
    if (i == 0) {
      if (value != 0) {
        throw DomainError("RationalPolynomial: division leaves a remainder");
      }
      break;
    }
    quotient[i - 1] = value;
    carry = value * root;
  }
  return RationalPolynomial(std::move(quotient));
}

Rational RationalPolynomial::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (std::size_t i = coefficients_.size(); i-- > 0;) {
    acc = acc * x + coefficients_[i];
  }
  return acc;
}

double RationalPolynomial::evaluate(double x) const {
  double acc = 0.0;
  for (std::size_t i = as_double_.size(); i-- > 0;) {
    acc = acc * x + as_double_[i];
  }
  return acc;
}

long double RationalPolynomial::evaluate(long double x) const {
  long double acc = 0.0L;
  for (std::size_t i = as_long_double_.size(); i-- > 0;) {
    acc = acc * x + as_long_double_[i];
  }
  return acc;
}

RationalPolynomial& RationalPolynomial::operator+=(const RationalPolynomial& rhs) {
  if (rhs.coefficients_.size() > coefficients_.size()) {
    coefficients_.resize(rhs.coefficients_.size());
  }
  for (std::size_t i = 0; i < rhs.coefficients_.size(); ++i) {
    coefficients_[i] += rhs.coefficients_[i];
  }
  normalize();
  return *this;
}

RationalPolynomial& RationalPolynomial::operator-=(const RationalPolynomial& rhs) {
  if (rhs.coefficients_.size() > coefficients_.size()) {
    coefficients_.resize(rhs.coefficients_.size());
  }
  for (std::size_t i = 0; i < rhs.coefficients_.size(); ++i) {
    coefficients_[i] -= rhs.coefficients_[i];
  }
  normalize();
  return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const RationalPolynomial& rhs) {
  if (coefficients_.empty() || rhs.coefficients_.empty()) {
    coefficients_.clear();
    normalize();
    return *this;
  }
  std::vector<Rational> out(coefficients_.size() + rhs.coefficients_.size() - 1);
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    if (coefficients_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coefficients_.size(); ++j) {
      out[i + j] += coefficients_[i] * rhs.coefficients_[j];
    }
  }
  coefficients_ = std::move(out);
  normalize();
  return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const Rational& scalar) {
  for (auto& c : coefficients_) {
    c *= scalar;
  }
  normalize();
  return *this;
}

std::string RationalPolynomial::to_string(const std::string& var) const {
  if (coefficients_.empty()) {
    return "0";
  }
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < coefficients_.size(); ++k) {
    const Rational& c = coefficients_[k];
    if (c == 0) continue;
    Rational magnitude = c < 0 ? Rational(-c) : c;
    if (first) {
      out << (c < 0 ? "-" : "");
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    out << magnitude;
    if (k >= 1) out << "*" << var;
    if (k >= 2) out << "^" << k;
  }
  return out.str();
}

}  // namespace casimir::specfun
