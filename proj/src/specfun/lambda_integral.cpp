#include "casimir/specfun/lambda_integral.hpp"

#include <boost/math/special_functions/gamma.hpp>
#include <cmath>

#include "casimir/errors.hpp"
#include "casimir/specfun/quadrature.hpp"

namespace casimir::specfun {

double lambda_integral(int mu, int nu) {
  if (mu < 0) throw DomainError("lambda_integral: mu must be >= 0");
  if (nu < 1) throw DomainError("lambda_integral: nu must be >= 1");

  // (e^u + 1)^{-nu} = e^{-nu u} (1 + e^{-u})^{-nu}
  auto f = [mu, nu](double u) {
    const double base = mu == 0 ? 1.0 : std::pow(u, mu);
    return base * std::exp(-nu * u - nu * std::log1p(std::exp(-u)));
  };

  const double rel_tol = 1e-13;
  KahanSum sum;
  double a = 0.0;
  double b = 1.0;
  for (int panel = 0; panel < 64; ++panel) {
    sum += integrate_interval(f, a, b, rel_tol).value;
    // Beyond b the integrand is below u^mu e^{-nu u}.
    const double tail = boost::math::tgamma(mu + 1.0, nu * b) / std::pow(double(nu), mu + 1.0);
    if (tail < 1e-14 * std::abs(sum.value())) {
      return sum.value();
    }
    a = b;
    b *= 2.0;
  }
  throw NonConvergenceError("lambda_integral: tail did not decay", sum.value(), 0.0, 0, 0);
}

}  // namespace casimir::specfun
