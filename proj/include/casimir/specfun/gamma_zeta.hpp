#pragma once

namespace casimir::specfun {

// Gamma(x) for x not a non-positive integer. Overflows to inf above ~171.6;
// use log_gamma there.
double gamma_fn(double x);
// ln |Gamma(x)|
double log_gamma(double x);
// 1/Gamma(x), zero at the poles of Gamma.
double recip_gamma(double x);

// Riemann zeta for any real s != 1.
double riemann_zeta(double s);
// (1 - 2^{1-s}) zeta(s); ln 2 at s = 1.
double dirichlet_eta(double s);

}  // namespace casimir::specfun
