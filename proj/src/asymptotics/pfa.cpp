#include "casimir/asymptotics/pfa.hpp"

#include <cmath>
#include <numbers>

#include "casimir/errors.hpp"
#include "casimir/specfun/gamma_zeta.hpp"

namespace casimir::asymptotics {

using specfun::gamma_fn;
using specfun::riemann_zeta;

namespace {

constexpr double kPi = std::numbers::pi;

void check_dim(int D) {
  if (D < 3) throw DomainError("pfa: D must be >= 3");
}

}  // namespace

double channel_weight(int D, modes::ChannelSelection channel) {
  check_dim(D);
  switch (channel) {
    case modes::ChannelSelection::TE: return (D - 2.0) / (D - 1.0);
    case modes::ChannelSelection::TM: return 1.0 / (D - 1.0);
    case modes::ChannelSelection::Total: return 1.0;
  }
  return 1.0;
}

double parallel_plate_density(int D, modes::BoundaryPair bc, Regime regime, double d, double T) {
  check_dim(D);
  if (!(d > 0.0)) throw DomainError("parallel_plate_density: d must be positive");
  const bool mixed = !bc.homogeneous();
  if (regime == Regime::ZeroT) {
    double v = (D - 1) * gamma_fn(0.5 * (D + 1)) / (std::pow(2.0, D + 1) * std::pow(kPi, 0.5 * (D + 1))) *
               riemann_zeta(D + 1) / std::pow(d, D);
    return mixed ? v * (1.0 - std::pow(2.0, -D)) : -v;
  }
  if (!(T >= 0.0)) throw DomainError("parallel_plate_density: T must be >= 0");
  double v = (D - 1) * gamma_fn(0.5 * D) / (std::pow(2.0, D) * std::pow(kPi, 0.5 * D)) *
             riemann_zeta(D) * T / std::pow(d, D - 1);
  return mixed ? v * (1.0 - std::pow(2.0, 1 - D)) : -v;
}

double pfa_coefficient(int D, modes::BoundaryPair bc, Regime regime,
                       modes::ChannelSelection channel) {
  check_dim(D);
  const bool mixed = !bc.homogeneous();
  const double w = channel_weight(D, channel);
  if (regime == Regime::ZeroT) {
    double c = (D - 1) * riemann_zeta(D + 1) * gamma_fn(0.5 * (D + 1)) /
               (std::sqrt(kPi) * std::pow(2.0, D) * gamma_fn(0.5 * D));
    return w * (mixed ? c * (1.0 - std::pow(2.0, -D)) : -c);
  }
  double c = (D - 1) * riemann_zeta(D) / std::pow(2.0, D - 1);
  return w * (mixed ? c * (1.0 - std::pow(2.0, 1 - D)) : -c);
}

double pfa_energy(const energy::Geometry& g, modes::BoundaryPair bc, Regime regime, double T,
                  modes::ChannelSelection channel) {
  const int D = g.dimension();
  const double area = 2.0 * std::pow(kPi, 0.5 * D) / gamma_fn(0.5 * D) * std::pow(g.a1(), D - 1);
  return channel_weight(D, channel) * area *
         parallel_plate_density(D, bc, regime, g.separation(), T);
}

}  // namespace casimir::asymptotics
