#pragma once

#include "casimir/energy/geometry.hpp"
#include "casimir/modes/modes.hpp"
#include "casimir/specfun/bessel.hpp"
#include "casimir/specfun/signed_log.hpp"

namespace casimir::energy {

// Everything about one (l, channel) needed to evaluate M_l and f_l.
struct ModeSpec {
  long l;
  double nu;
  double degeneracy;
  modes::BcCoefficientsD inner;
  modes::BcCoefficientsD outer;

  static ModeSpec make(long l, int D, modes::BoundaryPair bc, modes::Polarization channel);
};

// ln |M_l(xi)| with sign, xi > 0.
specfun::SignedLog log_m_ratio(const ModeSpec& mode, const Geometry& g, double xi,
                               const specfun::BesselOptions& opts = {});

double m_ratio(long l, const Geometry& g, modes::BoundaryPair bc, modes::Polarization channel,
               double xi);

// ln(1 - M_l(xi)); the closed form is used at xi = 0.
double f_l(const ModeSpec& mode, const Geometry& g, double xi,
           const specfun::BesselOptions& opts = {});
double f_l(long l, const Geometry& g, modes::BoundaryPair bc, modes::Polarization channel,
           double xi);

// f_l(0)
double f_l_static(const ModeSpec& mode, const Geometry& g);

}  // namespace casimir::energy
