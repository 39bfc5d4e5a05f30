#pragma once

#include "casimir/specfun/signed_log.hpp"

namespace casimir::specfun {

enum class BesselKind { I, K };
enum class BesselMethod { Automatic, Direct, Uniform };

struct BesselOptions {
  // Orders at or above this use the uniform expansion.
  double uniform_threshold = 50.0;
  // Arguments at or above this also use the uniform expansion.
  double uniform_argument = 80.0;
  int debye_order = 8;
  BesselMethod method = BesselMethod::Automatic;
};

template <class Real>
struct BesselValuesT {
  Real log_i;
  Real log_k;
  Real di_over_i;  // I'_nu / I_nu
  Real dk_over_k;  // K'_nu / K_nu
};
using BesselValues = BesselValuesT<double>;

template <class Real>
BesselValuesT<Real> bessel_values(Real nu, Real z, const BesselOptions& opts = {});

extern template BesselValuesT<double> bessel_values<double>(double, double, const BesselOptions&);
extern template BesselValuesT<long double> bessel_values<long double>(long double, long double,
                                                                      const BesselOptions&);

double log_bessel_i(double nu, double z, const BesselOptions& opts = {});
double log_bessel_k(double nu, double z, const BesselOptions& opts = {});

struct RobinDetail {
  SignedLog value;
  // Decimal digits lost in alpha + beta z B'/B.
  double cancellation_digits = 0.0;
  bool elevated = false;
};

// alpha B_nu(z) + beta z B'_nu(z) for B = I or K.
SignedLog robin_combination(double alpha, double beta, double nu, double z, BesselKind kind,
                            const BesselOptions& opts = {});
RobinDetail robin_combination_detailed(double alpha, double beta, double nu, double z,
                                       BesselKind kind, const BesselOptions& opts = {});

}  // namespace casimir::specfun
