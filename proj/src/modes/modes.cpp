#include "casimir/modes/modes.hpp"

#include "casimir/errors.hpp"

namespace casimir::modes {

namespace {

void check_dim(int D) {
  if (D < 3) throw DomainError("modes: dimension D must be >= 3");
}

void check_l(long l) {
  if (l < 1) throw DomainError("modes: l must be >= 1");
}

BigInt factorial(long n) {
  BigInt f = 1;
  for (long k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace

std::string to_string(BoundaryCondition bc) {
  return bc == BoundaryCondition::PerfectlyConducting ? "pc" : "ip";
}

std::string to_string(Polarization p) { return p == Polarization::TE ? "te" : "tm"; }

std::string to_string(ChannelSelection c) {
  switch (c) {
    case ChannelSelection::TE: return "te";
    case ChannelSelection::TM: return "tm";
    case ChannelSelection::Total: return "total";
  }
  return "total";
}

Rational degeneracy_exact(Polarization channel, long l, int D) {
  check_dim(D);
  check_l(l);
  if (channel == Polarization::TM) {
    // b_l = (2l+D-2)(l+D-3)! / ((D-2)! l!)
    return Rational(BigInt(2 * l + D - 2) * factorial(l + D - 3),
                    factorial(D - 2) * factorial(l));
  }
  // h_l = l(l+D-2)(2l+D-2)(l+D-4)! / ((D-3)! (l+1)!)
  return Rational(BigInt(l) * (l + D - 2) * (2 * l + D - 2) * factorial(l + D - 4),
                  factorial(D - 3) * factorial(l + 1));
}

double degeneracy(Polarization channel, long l, int D) {
  check_dim(D);
  check_l(l);
  const double x = static_cast<double>(l);
  double fact = 1.0;
  if (channel == Polarization::TM) {
    double prod = 2.0 * x + D - 2;
    for (int j = 1; j <= D - 3; ++j) prod *= x + j;
    for (int j = 2; j <= D - 2; ++j) fact *= j;
    return prod / fact;
  }
  double prod = x * (x + D - 2) * (2.0 * x + D - 2);
  for (int j = 2; j <= D - 4; ++j) prod *= x + j;
  if (D == 4) prod /= x + 1.0;
  if (D == 3) prod /= x * (x + 1.0);
  for (int j = 2; j <= D - 3; ++j) fact *= j;
  return prod / fact;
}

double nu(long l, int D) {
  check_dim(D);
  check_l(l);
  return static_cast<double>(l) + 0.5 * (D - 2);
}

Rational nu_exact(long l, int D) {
  check_dim(D);
  check_l(l);
  return Rational(l) + Rational(D - 2, 2);
}

BcCoefficients bc_coefficients(Polarization channel, BoundaryCondition bc, int D) {
  check_dim(D);
  const bool pc = bc == BoundaryCondition::PerfectlyConducting;
  if (channel == Polarization::TE) {
    return pc ? BcCoefficients{1, 0} : BcCoefficients{Rational(4 - D, 2), 1};
  }
  return pc ? BcCoefficients{Rational(D - 2, 2), 1} : BcCoefficients{1, 0};
}

BcCoefficientsD bc_coefficients_d(Polarization channel, BoundaryCondition bc, int D) {
  const BcCoefficients c = bc_coefficients(channel, bc, D);
  return {c.alpha.convert_to<double>(), c.beta.convert_to<double>()};
}

DegeneracyPolynomial degeneracy_polynomial(Polarization channel, int D) {
  check_dim(D);
  using specfun::RationalPolynomial;
  const Rational shift(D - 2, 2);
  // l + j as a polynomial in nu
  auto l_plus = [&](long j) {
    return RationalPolynomial(std::vector<Rational>{Rational(j) - shift, Rational(1)});
  };
  const RationalPolynomial two_nu = RationalPolynomial::monomial(2, 1);

  RationalPolynomial p = two_nu;
  if (channel == Polarization::TM) {
    for (int j = 1; j <= D - 3; ++j) p *= l_plus(j);
    p *= Rational(1) / Rational(factorial(D - 2));
    return DegeneracyPolynomial(channel, D, p);
  }
  p *= l_plus(0);
  p *= l_plus(D - 2);
  for (int j = 2; j <= D - 4; ++j) p *= l_plus(j);
  // (l+D-4)!/(l+1)! leaves 1/(l+1) at D = 4 and 1/(l(l+1)) at D = 3
  if (D <= 4) p = p.divide_by_linear(shift - 1);
  if (D == 3) p = p.divide_by_linear(shift);
  p *= Rational(1) / Rational(factorial(D - 3));
  return DegeneracyPolynomial(channel, D, p);
}

}  // namespace casimir::modes
