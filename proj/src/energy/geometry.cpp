#include "casimir/energy/geometry.hpp"

#include <cmath>

#include "casimir/errors.hpp"

namespace casimir::energy {

namespace {

void validate(double a1, double eps, int D) {
  if (!std::isfinite(a1) || !(a1 > 0.0)) throw DomainError("geometry: a1 must be positive");
  if (!std::isfinite(eps) || !(eps > 0.0)) throw DomainError("geometry: a2 must exceed a1");
  if (D < 3) throw DomainError("geometry: D must be >= 3");
}

}  // namespace

Geometry::Geometry(double a1, double a2, int D) : Geometry(a1, (a2 - a1) / a1, D, true) {
  a2_ = a2;
}

Geometry::Geometry(double a1, double eps, int D, bool)
    : a1_(a1), a2_(a1 * (1.0 + eps)), dim_(D), eps_(eps), log_ratio_(std::log1p(eps)) {
  validate(a1, eps, D);
}

Geometry Geometry::from_epsilon(double eps, int D, double a1) { return Geometry(a1, eps, D, true); }

Geometry Geometry::with_separation(double d) const { return from_epsilon(d / a1_, dim_, a1_); }

Geometry Geometry::scaled(double lambda) const {
  if (!(lambda > 0.0)) throw DomainError("geometry: scale factor must be positive");
  return from_epsilon(eps_, dim_, a1_ * lambda);
}

}  // namespace casimir::energy
