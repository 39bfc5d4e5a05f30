#include "casimir/specfun/bessel.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "casimir/errors.hpp"
#include "casimir/specfun/debye.hpp"

namespace casimir::specfun {

namespace {

// Taylor coefficients of 1/Gamma(1+x) about x = 0.
constexpr long double kRecipGamma[] = {
    1.0L,
    0.5772156649015328606065L,
    -0.655878071520253881077L,
    -0.042002635034095235529L,
    0.1665386113822914895017L,
    -0.04219773455554433674821L,
    -0.009621971527876973562115L,
    0.007218943246663099542395L,
    -0.001165167591859065112114L,
    -0.0002152416741149509728157L,
    0.0001280502823881161861532L,
    -0.00002013485478078823865569L,
    -0.000001250493482142670657345L,
    0.000001133027231981695882374L,
    -0.000000205633841697760710345L,
    0.000000006116095104481415817862L,
    0.000000005002007644469222930056L,
    -0.000000001181274570487020144588L,
    0.0000000001043426711691100510492L,
    0.00000000000778226343990507125405L,
    -0.000000000003696805618642205708188L,
    0.0000000000005100370287454475979015L,
    -0.00000000000002058326053566506783222L,
    -0.00000000000000534812253942301798237L,
    0.000000000000001226778628238260790159L,
    -0.0000000000000001181259301697458769514L,
    0.00000000000000000118669225475160033258L,
    0.000000000000000001412380655318031781556L,
    -0.0000000000000000002298745684435370206592L,
};
constexpr int kRecipGammaCount = sizeof(kRecipGamma) / sizeof(kRecipGamma[0]);

// gam1 = (1/G(1-mu) - 1/G(1+mu)) / (2 mu), gam2 = (1/G(1-mu) + 1/G(1+mu)) / 2
template <class Real>
void temme_gammas(Real mu, Real& gam1, Real& gam2, Real& gampl, Real& gammi) {
  gam1 = 0;
  gam2 = 0;
  Real pw = 1;
  for (int k = 0; k < kRecipGammaCount; ++k) {
    const Real c = static_cast<Real>(kRecipGamma[k]);
    if (k % 2 == 0) {
      gam2 += c * pw;
    } else {
      gam1 -= c * pw;
      pw *= mu * mu;
    }
  }
  gampl = gam2 - mu * gam1;
  gammi = gam2 + mu * gam1;
}

constexpr int kMaxIterations = 200000;

// ln K_mu and K_{mu+1}/K_mu for |mu| <= 1/2.
template <class Real>
void k_low_order(Real mu, Real x, Real& log_kmu, Real& ratio) {
  using std::abs;
  using std::cosh;
  using std::exp;
  using std::log;
  using std::sin;
  using std::sinh;
  using std::sqrt;
  const Real eps = std::numeric_limits<Real>::epsilon();
  const Real pi = std::numbers::pi_v<Real>;

  if (x < Real(2)) {
    const Real x2 = x / 2;
    const Real pimu = pi * mu;
    const Real fact = abs(pimu) < eps ? Real(1) : pimu / sin(pimu);
    Real d = -log(x2);
    Real e = mu * d;
    const Real fact2 = abs(e) < eps ? Real(1) : sinh(e) / e;
    Real gam1, gam2, gampl, gammi;
    temme_gammas(mu, gam1, gam2, gampl, gammi);
    Real ff = fact * (gam1 * cosh(e) + gam2 * fact2 * d);
    Real sum = ff;
    e = exp(e);
    Real p = e / (2 * gampl);
    Real q = 1 / (2 * e * gammi);
    Real c = 1;
    d = x2 * x2;
    Real sum1 = p;
    int i = 1;
    for (; i <= kMaxIterations; ++i) {
      const Real ri = i;
      ff = (ri * ff + p + q) / (ri * ri - mu * mu);
      c *= d / ri;
      p /= (ri - mu);
      q /= (ri + mu);
      const Real del = c * ff;
      sum += del;
      sum1 += c * (p - ri * ff);
      if (abs(del) < abs(sum) * eps) break;
    }
    if (i > kMaxIterations) throw NonConvergenceError("bessel: Temme series", 0, 0, 0, 0);
    log_kmu = log(sum);
    ratio = sum1 * (2 / x) / sum;
    return;
  }

  // Steed's continued fraction.
  Real b = 2 * (1 + x);
  Real d = 1 / b;
  Real h = d;
  Real delh = d;
  Real q1 = 0;
  Real q2 = 1;
  const Real a1 = Real(0.25) - mu * mu;
  Real q = a1;
  Real c = a1;
  Real a = -a1;
  Real s = 1 + q * delh;
  int i = 2;
  for (; i <= kMaxIterations; ++i) {
    a -= 2 * (i - 1);
    c = -a * c / i;
    const Real qnew = (q1 - b * q2) / a;
    q1 = q2;
    q2 = qnew;
    q += c * qnew;
    b += 2;
    d = 1 / (b + a * d);
    delh = (b * d - 1) * delh;
    h += delh;
    const Real dels = q * delh;
    s += dels;
    if (abs(dels / s) < eps) break;
  }
  if (i > kMaxIterations) throw NonConvergenceError("bessel: Steed continued fraction", 0, 0, 0, 0);
  h = a1 * h;
  log_kmu = Real(0.5) * log(pi / (2 * x)) - x - log(s);
  ratio = (mu + x + Real(0.5) - h) / x;
}

// I'_nu / I_nu by the modified Lentz method.
template <class Real>
Real i_log_derivative(Real nu, Real x) {
  using std::abs;
  const Real eps = std::numeric_limits<Real>::epsilon();
  const Real tiny = std::numeric_limits<Real>::min() / eps;
  const Real xi2 = 2 / x;
  Real h = nu / x;
  if (h < tiny) h = tiny;
  Real b = xi2 * nu;
  Real d = 0;
  Real c = h;
  int i = 1;
  for (; i <= kMaxIterations; ++i) {
    b += xi2;
    d = 1 / (b + d);
    c = b + 1 / c;
    const Real del = c * d;
    h *= del;
    if (abs(del - 1) < eps) break;
  }
  if (i > kMaxIterations) throw NonConvergenceError("bessel: CF1 did not converge", 0, 0, 0, 0);
  return h;
}

template <class Real>
BesselValuesT<Real> direct(Real nu, Real x) {
  using std::log;
  const int nl = static_cast<int>(nu + Real(0.5));
  const Real mu = nu - nl;
  Real log_k, ratio;
  k_low_order(mu, x, log_k, ratio);
  const Real xi2 = 2 / x;
  for (int i = 1; i <= nl; ++i) {
    const Real next = (mu + i) * xi2 + 1 / ratio;
    log_k += log(ratio);
    ratio = next;
  }
  BesselValuesT<Real> out;
  out.log_k = log_k;
  out.dk_over_k = nu / x - ratio;
  out.di_over_i = i_log_derivative(nu, x);
  out.log_i = -log(x) - log_k - log(out.di_over_i - out.dk_over_k);
  return out;
}

template <class Real>
BesselValuesT<Real> uniform(Real nu, Real z, int order) {
  using std::log;
  using std::log1p;
  using std::sqrt;
  const Real pi = std::numbers::pi_v<Real>;
  const Real w = z / nu;
  const Real s = sqrt(1 + w * w);
  const Real t = 1 / s;
  // ln(w / (1 + s)) written to avoid loss for small w
  const Real eta = s + log(w) - log1p(s);
  const DebyeSums<Real> sums = debye_sums(t, nu, order);
  BesselValuesT<Real> out;
  out.log_i = nu * eta - Real(0.5) * log(2 * pi * nu) - Real(0.5) * log(s) + log(sums.u_plus);
  out.log_k = -nu * eta + Real(0.5) * log(pi / (2 * nu)) - Real(0.5) * log(s) + log(sums.u_minus);
  out.di_over_i = (s / w) * sums.v_plus / sums.u_plus;
  out.dk_over_k = -(s / w) * sums.v_minus / sums.u_minus;
  return out;
}

void check_arguments(double nu, double z) {
  if (!std::isfinite(nu) || nu < 0.0) throw DomainError("bessel: order must be finite and >= 0");
  if (!std::isfinite(z) || !(z > 0.0)) throw DomainError("bessel: argument must be finite and > 0");
}

}  // namespace

template <class Real>
BesselValuesT<Real> bessel_values(Real nu, Real z, const BesselOptions& opts) {
  check_arguments(static_cast<double>(nu), static_cast<double>(z));
  constexpr bool extended = sizeof(Real) > sizeof(double);
  const int order = extended ? std::min(opts.debye_order + 4, kDebyeMaxOrder) : opts.debye_order;
  switch (opts.method) {
    case BesselMethod::Direct:
      return direct(nu, z);
    case BesselMethod::Uniform:
      if (!(nu > 0)) throw DomainError("bessel: uniform expansion needs nu > 0");
      return uniform(nu, z, order);
    case BesselMethod::Automatic:
      break;
  }
  if (nu >= Real(opts.uniform_threshold) || (nu >= Real(1) && z >= Real(opts.uniform_argument))) {
    return uniform(nu, z, order);
  }
  return direct(nu, z);
}

template BesselValuesT<double> bessel_values<double>(double, double, const BesselOptions&);
template BesselValuesT<long double> bessel_values<long double>(long double, long double,
                                                               const BesselOptions&);

double log_bessel_i(double nu, double z, const BesselOptions& opts) {
  return bessel_values(nu, z, opts).log_i;
}

double log_bessel_k(double nu, double z, const BesselOptions& opts) {
  return bessel_values(nu, z, opts).log_k;
}

namespace {

template <class Real>
RobinDetail robin_eval(Real alpha, Real beta, Real nu, Real z, BesselKind kind,
                       const BesselOptions& opts) {
  using std::abs;
  using std::log;
  using std::log10;
  const BesselValuesT<Real> b = bessel_values(nu, z, opts);
  const Real log_b = kind == BesselKind::I ? b.log_i : b.log_k;
  const Real zr = z * (kind == BesselKind::I ? b.di_over_i : b.dk_over_k);
  const Real term = beta * zr;
  const Real factor = alpha + term;
  RobinDetail out;
  const Real largest = std::max(abs(alpha), abs(term));
  if (factor == 0) {
    out.value = SignedLog::zero();
    out.cancellation_digits = std::numeric_limits<double>::infinity();
    return out;
  }
  out.cancellation_digits = static_cast<double>(log10(largest / abs(factor)));
  out.value = SignedLog(factor > 0 ? 1 : -1, static_cast<double>(log_b + log(abs(factor))));
  return out;
}

}  // namespace

RobinDetail robin_combination_detailed(double alpha, double beta, double nu, double z,
                                       BesselKind kind, const BesselOptions& opts) {
  if (alpha == 0.0 && beta == 0.0) throw DomainError("robin_combination: alpha = beta = 0");
  check_arguments(nu, z);
  RobinDetail out = robin_eval<double>(alpha, beta, nu, z, kind, opts);
  if (out.cancellation_digits > 6.0) {
    RobinDetail hi = robin_eval<long double>(alpha, beta, nu, z, kind, opts);
    hi.elevated = true;
    return hi;
  }
  return out;
}

SignedLog robin_combination(double alpha, double beta, double nu, double z, BesselKind kind,
                            const BesselOptions& opts) {
  return robin_combination_detailed(alpha, beta, nu, z, kind, opts).value;
}

}  // namespace casimir::specfun
