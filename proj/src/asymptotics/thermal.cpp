#include "casimir/asymptotics/thermal.hpp"

#include <cmath>
#include <numbers>

#include "casimir/errors.hpp"
#include "casimir/specfun/gamma_zeta.hpp"

namespace casimir::asymptotics {

using specfun::gamma_fn;
using specfun::riemann_zeta;

namespace {

// Gamma((D+1)/2)/Gamma(D/2) zeta(D+1) (a1 T)^(D+1) / sqrt(pi)
double base(int D, double a1, double T) {
  if (D < 3) throw DomainError("thermal: D must be >= 3");
  if (!(a1 > 0.0)) throw DomainError("thermal: a1 must be positive");
  if (!(T >= 0.0)) throw DomainError("thermal: T must be >= 0");
  return gamma_fn(0.5 * (D + 1)) / gamma_fn(0.5 * D) * riemann_zeta(D + 1.0) *
         std::pow(a1 * T, D + 1) / std::sqrt(std::numbers::pi);
}

}  // namespace

double thermal_leading(int D, modes::BoundaryCondition inner, modes::ChannelSelection channel,
                       double a1, double T) {
  const double b = base(D, a1, T) / a1;
  const double h1 = 0.5 * D * (D - 1.0);
  const double b1 = D;
  // -(d_1) (2 alpha + beta D)/(2 alpha - beta D) per channel
  auto term = [&](modes::Polarization pol, double d1) {
    const auto c = modes::bc_coefficients_d(pol, inner, D);
    return -d1 * (2.0 * c.alpha + c.beta * D) / (2.0 * c.alpha - c.beta * D) * b;
  };
  const double te = term(modes::Polarization::TE, h1);
  const double tm = term(modes::Polarization::TM, b1);
  switch (channel) {
    case modes::ChannelSelection::TE: return te;
    case modes::ChannelSelection::TM: return tm;
    case modes::ChannelSelection::Total: return te + tm;
  }
  return te + tm;
}

double pfa_thermal_force(int D, double a1, double T) {
  return -2.0 * (D - 1.0) * base(D, a1, T) / (a1 * a1);
}

double exact_thermal_force_leading(int D, modes::BoundaryCondition inner, double a1, double T) {
  const double b = base(D, a1, T) / (a1 * a1);
  if (inner == modes::BoundaryCondition::PerfectlyConducting)
    return -0.5 * D * D * (D - 1.0) * b;
  return -double(D) * D / (D - 2.0) * b;
}

}  // namespace casimir::asymptotics
