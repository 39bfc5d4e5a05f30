#include "casimir/specfun/gamma_zeta.hpp"

#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/special_functions/zeta.hpp>
#include <cmath>
#include <numbers>

#include "casimir/errors.hpp"

namespace casimir::specfun {

namespace {

bool is_pole(double x) { return x <= 0.0 && x == std::nearbyint(x); }

}  // namespace

double gamma_fn(double x) {
  if (!std::isfinite(x)) throw DomainError("gamma_fn: argument not finite");
  if (is_pole(x)) throw PoleError("gamma_fn: pole at non-positive integer");
  if (x > 171.6) return std::numeric_limits<double>::infinity();
  return boost::math::tgamma(x);
}

double log_gamma(double x) {
  if (!std::isfinite(x)) throw DomainError("log_gamma: argument not finite");
  if (is_pole(x)) throw PoleError("log_gamma: pole at non-positive integer");
  return boost::math::lgamma(x);
}

double recip_gamma(double x) {
  if (!std::isfinite(x)) throw DomainError("recip_gamma: argument not finite");
  if (is_pole(x)) return 0.0;
  if (x > 171.6) return 0.0;
  return 1.0 / boost::math::tgamma(x);
}

double riemann_zeta(double s) {
  if (!std::isfinite(s)) throw DomainError("riemann_zeta: argument not finite");
  if (s == 1.0) throw PoleError("riemann_zeta: pole at s = 1");
  return boost::math::zeta(s);
}

double dirichlet_eta(double s) {
  if (!std::isfinite(s)) throw DomainError("dirichlet_eta: argument not finite");
  if (s == 1.0) return std::numbers::ln2;
  return -std::expm1((1.0 - s) * std::numbers::ln2) * boost::math::zeta(s);
}

}  // namespace casimir::specfun
