#pragma once

namespace casimir::specfun {

// Integral over [0, inf) of u^mu / (e^u + 1)^nu.
double lambda_integral(int mu, int nu);

}  // namespace casimir::specfun
