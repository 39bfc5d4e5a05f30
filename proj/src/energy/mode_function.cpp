#include "casimir/energy/mode_function.hpp"

#include <cmath>

#include "casimir/errors.hpp"

namespace casimir::energy {

using specfun::BesselOptions;
using specfun::BesselValuesT;
using specfun::SignedLog;

namespace {

template <class Real>
struct LogTerm {
  Real log;
  int sign;
};

// ln |alpha B + beta z B'| for a Bessel value already evaluated at z.
template <class Real>
LogTerm<Real> robin(const modes::BcCoefficientsD& c, Real z, Real log_b, Real dlog_b) {
  const Real factor = Real(c.alpha) + Real(c.beta) * z * dlog_b;
  if (factor == 0) throw PrecisionLossError("mode function: boundary combination vanished");
  using std::abs;
  using std::log;
  return {log_b + log(abs(factor)), factor > 0 ? 1 : -1};
}

template <class Real>
LogTerm<Real> log_m(const ModeSpec& mode, const Geometry& g, Real xi, const BesselOptions& opts) {
  const Real nu = mode.nu;
  const Real z1 = Real(g.a1()) * xi;
  const Real z2 = Real(g.a2()) * xi;
  const BesselValuesT<Real> b1 = specfun::bessel_values<Real>(nu, z1, opts);
  const BesselValuesT<Real> b2 = specfun::bessel_values<Real>(nu, z2, opts);
  const LogTerm<Real> n1 = robin<Real>(mode.inner, z1, b1.log_i, b1.di_over_i);
  const LogTerm<Real> n2 = robin<Real>(mode.outer, z2, b2.log_k, b2.dk_over_k);
  const LogTerm<Real> d2 = robin<Real>(mode.outer, z2, b2.log_i, b2.di_over_i);
  const LogTerm<Real> d1 = robin<Real>(mode.inner, z1, b1.log_k, b1.dk_over_k);
  return {(n1.log - d1.log) + (n2.log - d2.log), n1.sign * n2.sign * d1.sign * d2.sign};
}

void check_xi(double xi) {
  if (!std::isfinite(xi) || xi < 0.0) throw DomainError("mode function: xi must be >= 0");
}

}  // namespace

ModeSpec ModeSpec::make(long l, int D, modes::BoundaryPair bc, modes::Polarization channel) {
  ModeSpec m;
  m.l = l;
  m.nu = modes::nu(l, D);
  m.degeneracy = modes::degeneracy(channel, l, D);
  m.inner = modes::bc_coefficients_d(channel, bc.inner, D);
  m.outer = modes::bc_coefficients_d(channel, bc.outer, D);
  return m;
}

SignedLog log_m_ratio(const ModeSpec& mode, const Geometry& g, double xi,
                      const BesselOptions& opts) {
  check_xi(xi);
  if (xi == 0.0) throw DomainError("log_m_ratio: xi must be > 0");
  const LogTerm<double> m = log_m<double>(mode, g, xi, opts);
  return SignedLog(m.sign, m.log);
}

double m_ratio(long l, const Geometry& g, modes::BoundaryPair bc, modes::Polarization channel,
               double xi) {
  if (!(xi > 0.0)) throw DomainError("m_ratio: xi must be > 0");
  const ModeSpec mode = ModeSpec::make(l, g.dimension(), bc, channel);
  return log_m_ratio(mode, g, xi).value();
}

double f_l_static(const ModeSpec& mode, const Geometry& g) {
  const double nu = mode.nu;
  const double c = (mode.inner.alpha + mode.inner.beta * nu) *
                   (mode.outer.alpha - mode.outer.beta * nu) /
                   ((mode.inner.alpha - mode.inner.beta * nu) *
                    (mode.outer.alpha + mode.outer.beta * nu));
  const double x = -2.0 * nu * g.log_ratio();
  if (c == 1.0) {
    return std::log(-std::expm1(x));
  }
  return std::log1p(-c * std::exp(x));
}

double f_l(const ModeSpec& mode, const Geometry& g, double xi, const BesselOptions& opts) {
  check_xi(xi);
  if (xi == 0.0) return f_l_static(mode, g);
  const LogTerm<double> m = log_m<double>(mode, g, xi, opts);
  if (m.sign < 0) return std::log1p(std::exp(m.log));
  if (m.log < -0.7) return std::log1p(-std::exp(m.log));
  const double one_minus = -std::expm1(m.log);
  if (one_minus >= 1e-12) return std::log(one_minus);

  const LogTerm<long double> mh = log_m<long double>(mode, g, xi, opts);
  const long double om = -std::expm1(mh.log);
  if (mh.sign < 0 || !(om > 1e-17L)) {
    throw PrecisionLossError("f_l: 1 - M_l is not resolvable at extended precision");
  }
  return static_cast<double>(std::log(om));
}

double f_l(long l, const Geometry& g, modes::BoundaryPair bc, modes::Polarization channel,
           double xi) {
  const ModeSpec mode = ModeSpec::make(l, g.dimension(), bc, channel);
  return f_l(mode, g, xi);
}

}  // namespace casimir::energy
