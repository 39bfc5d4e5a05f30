#pragma once

#include "casimir/modes/modes.hpp"

namespace casimir::asymptotics {

// P1 or Q1 = lambda t + gamma t^3; T(t) = Q1 - P1 = delta t + kappa t^3.
struct CoefficientParams {
  double lambda = 0.0;
  double gamma = 0.0;
  double delta = 0.0;
  double kappa = 0.0;
};

// A(z) = base * (1 + c1 eps + c2 eps^2)
struct AFunction {
  double base = 0.0;
  double c1 = 0.0;
  double c2 = 0.0;
  double operator()(double eps) const { return base * (1.0 + eps * (c1 + eps * c2)); }
};

// C(z) = regular + inverse_eps / eps
struct CFunction {
  double regular = 0.0;
  double inverse_eps = 0.0;
  double operator()(double eps) const { return regular + inverse_eps / eps; }
};

struct CoefficientFunctions {
  AFunction A;
  double B = 0.0;
  CFunction C;
  double G = 0.0;
};

AFunction coefficient_A(double z);
double coefficient_B(double z, double lambda, double gamma);
CFunction coefficient_C(double z, const CoefficientParams& p);
double coefficient_G(double z, double delta, double kappa);

// All four at one z; A requires z > 1.
CoefficientFunctions expansion_coefficient_functions(double z, const CoefficientParams& p);

// (lambda, gamma) of D1 or M1_alpha for one sphere, (delta, kappa) of outer minus inner.
CoefficientParams coefficient_params(modes::Polarization channel, modes::BoundaryPair bc, double D);

// Relative epsilon^1 and epsilon^2 coefficients of the zero-T expansion rebuilt from
// A, B, C, G with D treated as a real parameter.
struct AssembledSeries {
  double leading = 0.0;  // coefficient of 1/(a1 eps^D)
  double c1 = 0.0;
  double c2 = 0.0;
};

AssembledSeries assemble_zero_T(double D, modes::Polarization channel, modes::BoundaryPair bc);

}  // namespace casimir::asymptotics
