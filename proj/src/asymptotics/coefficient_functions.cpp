#include "casimir/asymptotics/coefficient_functions.hpp"

#include <cmath>
#include <numbers>

#include "casimir/errors.hpp"
#include "casimir/specfun/gamma_zeta.hpp"

namespace casimir::asymptotics {

using specfun::dirichlet_eta;
using specfun::gamma_fn;
using specfun::recip_gamma;
using specfun::riemann_zeta;

namespace {

constexpr double kPi = std::numbers::pi;
const double kSqrtPiHalf = 0.5 * std::sqrt(kPi);

bool nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

struct SpherePoly {
  double lambda;
  double gamma;
};

// D1 for beta = 0, M1_alpha for beta = 1
SpherePoly sphere_poly(modes::Polarization channel, modes::BoundaryCondition bc, double D) {
  const bool te = channel == modes::Polarization::TE;
  const bool pc = bc == modes::BoundaryCondition::PerfectlyConducting;
  if (te == pc) return {1.0 / 8.0, -5.0 / 24.0};
  double alpha = te ? 0.5 * (4.0 - D) : 0.5 * (D - 2.0);
  return {alpha - 3.0 / 8.0, 7.0 / 24.0};
}

// varpi_{D;D-2} and varpi_{D;D-4} for real D
void top_coefficients(modes::Polarization channel, double D, double& w2, double& w4) {
  if (channel == modes::Polarization::TE) {
    w2 = 2.0 * recip_gamma(D - 2.0);
    w4 = -(D * D - 6.0 * D + 32.0) / 12.0 * recip_gamma(D - 3.0);
  } else {
    w2 = 2.0 * recip_gamma(D - 1.0);
    w4 = -recip_gamma(D - 4.0) / 12.0;
  }
}

}  // namespace

AFunction coefficient_A(double z) {
  if (!(z > 1.0)) throw PoleError("coefficient_A: pole at z <= 1");
  AFunction a;
  a.base = kSqrtPiHalf * gamma_fn(0.5 * (z - 1.0)) / gamma_fn(0.5 * z);
  a.c1 = 0.5 * (z - 1.0);
  a.c2 = (z - 1.0) * (3.0 * z * z - 2.0 * z - 17.0) / (24.0 * (z + 2.0));
  return a;
}

double coefficient_B(double z, double lambda, double gamma) {
  if (nonpositive_integer(0.5 * (z + 1.0)) || z == -2.0 || z == -4.0)
    throw PoleError("coefficient_B: pole");
  const double pre = kSqrtPiHalf * gamma_fn(0.5 * (z + 1.0)) * recip_gamma(0.5 * (z + 2.0));
  const double r1 = (z + 1.0) / (z + 2.0);
  const double r2 = r1 * (z + 3.0) / (z + 4.0);
  return pre * (-lambda + (lambda - 3.0 * gamma) * r1 + 3.0 * gamma * r2);
}

CFunction coefficient_C(double z, const CoefficientParams& p) {
  if (nonpositive_integer(0.5 * (z + 1.0)) || z == -2.0 || z == -4.0)
    throw PoleError("coefficient_C: pole");
  const double pre = kSqrtPiHalf * gamma_fn(0.5 * (z + 1.0)) * recip_gamma(0.5 * (z + 2.0));
  const double r1 = (z + 1.0) / (z + 2.0);
  const double r2 = r1 * (z + 3.0) / (z + 4.0);
  CFunction c;
  c.regular = pre * (-p.lambda + (p.lambda - 3.0 * p.gamma + 0.5 * (z + 1.0) * p.delta) * r1 +
                     (3.0 * p.gamma + 0.5 * (z + 1.0) * p.kappa) * r2);
  c.inverse_eps = pre * (p.delta + p.kappa * r1);
  return c;
}

double coefficient_G(double z, double delta, double kappa) {
  if (nonpositive_integer(0.5 * (z + 3.0)) || z == -4.0 || z == -6.0)
    throw PoleError("coefficient_G: pole");
  const double pre = kSqrtPiHalf * gamma_fn(0.5 * (z + 3.0)) * recip_gamma(0.5 * (z + 4.0));
  const double r1 = (z + 3.0) / (z + 4.0);
  const double r2 = r1 * (z + 5.0) / (z + 6.0);
  return pre * (delta * delta + 2.0 * delta * kappa * r1 + kappa * kappa * r2);
}

CoefficientFunctions expansion_coefficient_functions(double z, const CoefficientParams& p) {
  return {coefficient_A(z), coefficient_B(z, p.lambda, p.gamma), coefficient_C(z, p),
          coefficient_G(z, p.delta, p.kappa)};
}

CoefficientParams coefficient_params(modes::Polarization channel, modes::BoundaryPair bc,
                                     double D) {
  const SpherePoly in = sphere_poly(channel, bc.inner, D);
  const SpherePoly out = sphere_poly(channel, bc.outer, D);
  return {out.lambda, out.gamma, out.lambda - in.lambda, out.gamma - in.gamma};
}

AssembledSeries assemble_zero_T(double D, modes::Polarization channel, modes::BoundaryPair bc) {
  if (!(D > 3.0)) throw DomainError("assemble_zero_T: needs D > 3");
  double w2 = 0.0, w4 = 0.0;
  top_coefficients(channel, D, w2, w4);
  const CoefficientParams p = coefficient_params(channel, bc, D);
  const AFunction aD = coefficient_A(D);
  const double a0 = coefficient_A(D - 2.0).base;

  AssembledSeries s;
  s.c1 = aD.c1;
  s.c2 = aD.c2;
  if (bc.homogeneous()) {
    const double lead = w2 * gamma_fn(D) * riemann_zeta(D + 1.0) * aD.base;
    s.leading = -lead / (2.0 * kPi * std::pow(2.0, D));
    const double z1 = riemann_zeta(D - 1.0);
    s.c2 += 4.0 * (w4 * gamma_fn(D - 2.0) * z1 * a0 -
                   w2 * gamma_fn(D - 1.0) * z1 * coefficient_B(D - 2.0, p.lambda, p.gamma)) /
            lead;
    return s;
  }
  const double lead = w2 * gamma_fn(D) * dirichlet_eta(D + 1.0) * aD.base;
  s.leading = lead / (2.0 * kPi * std::pow(2.0, D));
  const double e1 = dirichlet_eta(D - 1.0);
  const CFunction c = coefficient_C(D - 2.0, p);
  s.c1 -= 4.0 * w2 * gamma_fn(D - 1.0) * e1 * c.inverse_eps / lead;
  s.c2 += 4.0 * (w4 * gamma_fn(D - 2.0) * e1 * a0 - w2 * gamma_fn(D - 1.0) * e1 * c.regular) / lead;
  s.c2 += 8.0 * w2 * gamma_fn(D - 2.0) * dirichlet_eta(D - 3.0) *
          coefficient_G(D - 4.0, p.delta, p.kappa) / lead;
  return s;
}

}  // namespace casimir::asymptotics
