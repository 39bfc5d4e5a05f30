#include <cmath>
#include <numbers>

#include "casimir/errors.hpp"
#include "casimir/specfun/bessel.hpp"
#include "casimir/specfun/debye.hpp"
#include "casimir/specfun/gamma_zeta.hpp"
#include "casimir/specfun/lambda_integral.hpp"
#include "casimir/specfun/quadrature.hpp"
#include "casimir/specfun/rational_polynomial.hpp"
#include "casimir/specfun/signed_log.hpp"
#include "doctest.h"

using namespace casimir;
using namespace casimir::specfun;

TEST_CASE("signed log arithmetic") {
  const auto a = SignedLog::from_value(-3.0), b = SignedLog::from_value(0.5);
  CHECK((a * b).value() == doctest::Approx(-1.5).epsilon(1e-15));
  CHECK((a / b).value() == doctest::Approx(-6.0).epsilon(1e-15));
  CHECK(SignedLog::from_value(0.0).is_zero());
  CHECK((a * SignedLog::zero()).is_zero());
  CHECK_THROWS_AS(a / SignedLog::zero(), DomainError);
  // far outside double range
  const SignedLog big(1, 2000.0);
  CHECK((big / big).value() == doctest::Approx(1.0));
}

TEST_CASE("rational polynomial algebra") {
  const RationalPolynomial p({Rational(1), Rational(-3), Rational(2)});  // (1 - x)(1 - 2x)
  CHECK(p.degree() == 2);
  CHECK(p.evaluate(Rational(1)) == 0);
  const auto q = p.divide_by_linear(Rational(1));
  CHECK(q == RationalPolynomial({Rational(-1), Rational(2)}));
  CHECK_THROWS_AS(p.divide_by_linear(Rational(2)), DomainError);
  CHECK(p.derivative().integral() + RationalPolynomial::constant(Rational(1)) == p);
  CHECK((p - p).is_zero());
  CHECK(p.to_string("x") == "1 - 3*x + 2*x^2");
}

TEST_CASE("debye polynomials") {
  // u_1 = (3t - 5t^3)/24
  CHECK(debye_u(1) == RationalPolynomial({Rational(0), Rational(1, 8), Rational(0), Rational(-5, 24)}));
  CHECK(debye_v(1) == RationalPolynomial({Rational(0), Rational(-3, 8), Rational(0), Rational(7, 24)}));
  CHECK(debye_D(1) == RationalPolynomial({Rational(0), Rational(1, 8), Rational(0), Rational(-5, 24)}));
  for (const Rational& a : {Rational(0), Rational(1, 2), Rational(2)})
    CHECK(debye_M(1, a) ==
          RationalPolynomial({Rational(0), a - Rational(3, 8), Rational(0), Rational(7, 24)}));
  // D_2 = t^2/16 - 3t^4/8 + 5t^6/16
  CHECK(debye_D(2) == RationalPolynomial({Rational(0), Rational(0), Rational(1, 16), Rational(0),
                                          Rational(-3, 8), Rational(0), Rational(5, 16)}));
  CHECK(debye_t(1e-9) == doctest::Approx(1.0));
  CHECK_THROWS_AS(debye_t(0.0), DomainError);
  CHECK(debye_eta_derivative(2.0) == doctest::Approx(std::sqrt(5.0) / 2.0));
  CHECK_THROWS(debye_u(kDebyeMaxOrder + 1));
}

TEST_CASE("bessel wronskian and closed forms") {
  for (double nu : {0.5, 2.0, 10.25, 80.0, 700.0})
    for (double z : {1e-3, 0.3, 4.0, 90.0, 2000.0}) {
      const auto b = bessel_values(nu, z);
      const double w = z * std::exp(b.log_i + b.log_k) * (b.di_over_i - b.dk_over_k);
      CHECK(std::abs(w - 1.0) <= 1e-11);
    }
  const double z = 2.5;
  CHECK(log_bessel_k(0.5, z) == doctest::Approx(0.5 * std::log(std::numbers::pi / (2 * z)) - z).epsilon(1e-14));
  CHECK(std::exp(log_bessel_i(1.5, z)) ==
        doctest::Approx(std::sqrt(2 / (std::numbers::pi * z)) * (std::cosh(z) - std::sinh(z) / z)).epsilon(1e-13));
}

TEST_CASE("bessel uniform and direct agree") {
  BesselOptions uni, dir;
  uni.method = BesselMethod::Uniform;
  dir.method = BesselMethod::Direct;
  for (double nu : {60.0, 200.5})
    for (double z : {0.2, 1.0, 5.0}) {
      const auto a = bessel_values(nu, nu * z, uni), b = bessel_values(nu, nu * z, dir);
      CHECK(a.log_i == doctest::Approx(b.log_i).epsilon(1e-10));
      CHECK(a.log_k == doctest::Approx(b.log_k).epsilon(1e-10));
      CHECK(a.di_over_i == doctest::Approx(b.di_over_i).epsilon(1e-10));
      CHECK(a.dk_over_k == doctest::Approx(b.dk_over_k).epsilon(1e-10));
    }
}

TEST_CASE("bessel domain errors") {
  CHECK_THROWS_AS(bessel_values(1.0, 0.0), DomainError);
  CHECK_THROWS_AS(bessel_values(1.0, -2.0), DomainError);
  CHECK_THROWS_AS(robin_combination(0.0, 0.0, 1.5, 1.0, BesselKind::I), DomainError);
}

TEST_CASE("robin combination") {
  // alpha = 1, beta = 0 reduces to the function itself
  const auto r = robin_combination(1.0, 0.0, 3.5, 2.0, BesselKind::K);
  CHECK(r.sign() == 1);
  CHECK(r.log_magnitude() == doctest::Approx(log_bessel_k(3.5, 2.0)).epsilon(1e-14));
  // z K' < 0
  CHECK(robin_combination(0.0, 1.0, 3.5, 2.0, BesselKind::K).sign() == -1);
}

TEST_CASE("gamma and zeta") {
  CHECK(gamma_fn(5.0) == doctest::Approx(24.0));
  CHECK(gamma_fn(0.5) == doctest::Approx(std::sqrt(std::numbers::pi)));
  CHECK(recip_gamma(-3.0) == 0.0);
  CHECK_THROWS_AS(gamma_fn(-2.0), PoleError);
  CHECK_THROWS_AS(gamma_fn(0.0), PoleError);
  CHECK(log_gamma(200.0) == doctest::Approx(std::lgamma(200.0)).epsilon(1e-14));
  CHECK(riemann_zeta(2.0) == doctest::Approx(std::numbers::pi * std::numbers::pi / 6).epsilon(1e-15));
  CHECK(riemann_zeta(-1.0) == doctest::Approx(-1.0 / 12).epsilon(1e-14));
  CHECK_THROWS_AS(riemann_zeta(1.0), PoleError);
  CHECK(dirichlet_eta(1.0) == doctest::Approx(std::numbers::ln2).epsilon(1e-15));
  CHECK(dirichlet_eta(3.0) == doctest::Approx(0.75 * riemann_zeta(3.0)).epsilon(1e-15));
}

TEST_CASE("lambda integral") {
  CHECK(lambda_integral(0, 1) == doctest::Approx(std::numbers::ln2).epsilon(1e-12));
  CHECK(lambda_integral(1, 1) == doctest::Approx(std::numbers::pi * std::numbers::pi / 12).epsilon(1e-12));
}

TEST_CASE("quadrature") {
  const auto a = integrate_interval([](double x) { return std::sin(x); }, 0.0, std::numbers::pi, 1e-13);
  CHECK(a.converged);
  CHECK(a.value == doctest::Approx(2.0).epsilon(1e-13));
  const auto b = integrate_to_infinity([](double x) { return x * std::exp(-x); }, 1.0, 1e-12, 0.0);
  CHECK(b.value == doctest::Approx(1.0).epsilon(1e-11));
  KahanSum k;
  k += 1.0;
  for (int i = 0; i < 1000; ++i) k += 1e-17;
  CHECK(k.value() > 1.0);
}
