#pragma once

#include "casimir/specfun/rational_polynomial.hpp"

namespace casimir::specfun {

// Tables are generated once up to this order.
inline constexpr int kDebyeMaxOrder = 20;
inline constexpr int kDebyeDefaultOrder = 8;

// u_k(t), v_k(t) of the uniform expansions of I_nu(nu z), I'_nu(nu z).
const RationalPolynomial& debye_u(int k);
const RationalPolynomial& debye_v(int k);

// Coefficients of ln(1 + sum_k u_k / nu^k) in powers of 1/nu.
const RationalPolynomial& debye_D(int k);

// Coefficients of ln(1 + sum_k (v_k + alpha t u_{k-1}) / nu^k).
RationalPolynomial debye_M(int k, const Rational& alpha);

double debye_t(double z);
double debye_eta(double z);
// d eta / dz = sqrt(1 + z^2) / z
double debye_eta_derivative(double z);

template <class Real>
struct DebyeSums {
  Real u_plus;   // sum u_k / nu^k
  Real u_minus;  // sum (-1)^k u_k / nu^k
  Real v_plus;
  Real v_minus;
  Real last_term;  // |u_order| / nu^order, a truncation gauge
};

template <class Real>
DebyeSums<Real> debye_sums(Real t, Real nu, int order);

extern template DebyeSums<double> debye_sums<double>(double, double, int);
extern template DebyeSums<long double> debye_sums<long double>(long double, long double, int);

}  // namespace casimir::specfun
