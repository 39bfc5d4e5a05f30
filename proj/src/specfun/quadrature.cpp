#include "casimir/specfun/quadrature.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>

#include "casimir/errors.hpp"

namespace casimir::specfun {

QuadratureResult integrate_interval(const Integrand& f, double a, double b, double rel_tol) {
  QuadratureResult out;
  double err = 0.0;
  double l1 = 0.0;
  out.value = boost::math::quadrature::gauss_kronrod<double, 21>::integrate(f, a, b, 15, rel_tol,
                                                                            &err, &l1);
  out.error = err;
  out.panels = 1;
  out.converged = err <= std::max(rel_tol * l1, 1e-300) * 10.0 || err <= 4e-16 * l1;
  return out;
}

QuadratureResult integrate_to_infinity(const Integrand& f, double scale, double rel_tol,
                                       double abs_tol, int max_panels) {
  if (!(scale > 0.0)) throw DomainError("integrate_to_infinity: scale must be positive");
  KahanSum sum;
  double error = 0.0;
  double a = 0.0;
  double b = scale;
  QuadratureResult out;
  for (int panel = 0; panel < max_panels; ++panel) {
    const QuadratureResult piece = integrate_interval(f, a, b, rel_tol);
    sum += piece.value;
    error += piece.error;
    out.panels = panel + 1;
    out.converged = out.converged && piece.converged;

    const double fb = f(b);
    if (fb == 0.0) {
      out.value = sum.value();
      out.error = error;
      return out;
    }
    const double m = 0.5 * (a + b);
    const double fm = f(m);
    const double total = std::abs(sum.value());
    const double target = std::max(abs_tol, rel_tol * total);
    if (fm != 0.0 && std::abs(fb) < std::abs(fm) && (fb > 0) == (fm > 0)) {
      const double rate = std::log(std::abs(fm) / std::abs(fb)) / (b - m);
      const double tail = fb / rate;
      if (std::abs(tail) < target) {
        sum += tail;
        error += std::abs(tail);
        out.value = sum.value();
        out.error = error;
        return out;
      }
    }
    a = b;
    b *= 2.0;
  }
  out.value = sum.value();
  out.error = error;
  out.converged = false;
  return out;
}

}  // namespace casimir::specfun
