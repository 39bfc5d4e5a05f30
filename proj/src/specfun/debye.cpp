#include "casimir/specfun/debye.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "casimir/errors.hpp"

namespace casimir::specfun {

namespace {

using Poly = RationalPolynomial;

// Coefficients c_k of ln(1 + sum_{k>=1} a_k x^k) given a_1..a_n.
std::vector<Poly> formal_log(const std::vector<Poly>& a) {
  const std::size_t n = a.size();
  std::vector<Poly> c(n);
  for (std::size_t k = 1; k < n; ++k) {
    Poly acc;
    for (std::size_t j = 1; j < k; ++j) {
      acc += c[j] * a[k - j] * Rational(static_cast<long>(j));
    }
    c[k] = a[k] - acc * Rational(1, static_cast<long>(k));
  }
  return c;
}

struct Tables {
  std::vector<Poly> u, v, d;
  std::vector<std::vector<double>> u_d, v_d;
  std::vector<std::vector<long double>> u_ld, v_ld;
};

Tables build_tables() {
  Tables tab;
  const int n = kDebyeMaxOrder;
  const Poly t = Poly::monomial(1, 1);
  const Poly t2 = Poly::monomial(1, 2);
  const Poly one = Poly::constant(1);
  const Poly one_minus_t2 = one - t2;
  const Poly w = t2 * one_minus_t2;          // t^2 (1 - t^2)
  const Poly tw = t * one_minus_t2;          // t (1 - t^2)
  const Poly weight = one - Poly::monomial(5, 2);

  tab.u.push_back(one);
  tab.v.push_back(one);
  for (int k = 1; k <= n; ++k) {
    const Poly& prev = tab.u.back();
    const Poly dprev = prev.derivative();
    Poly uk = w * dprev * Rational(1, 2) + (weight * prev).integral() * Rational(1, 8);
    Poly vk = uk - w * dprev - tw * prev * Rational(1, 2);
    tab.u.push_back(std::move(uk));
    tab.v.push_back(std::move(vk));
  }
  tab.d = formal_log(tab.u);

  for (int k = 0; k <= n; ++k) {
    std::vector<double> ud, vd;
    std::vector<long double> ul, vl;
    for (const auto& c : tab.u[k].coefficients()) {
      ud.push_back(c.convert_to<double>());
      ul.push_back(c.convert_to<long double>());
    }
    for (const auto& c : tab.v[k].coefficients()) {
      vd.push_back(c.convert_to<double>());
      vl.push_back(c.convert_to<long double>());
    }
    tab.u_d.push_back(std::move(ud));
    tab.v_d.push_back(std::move(vd));
    tab.u_ld.push_back(std::move(ul));
    tab.v_ld.push_back(std::move(vl));
  }
  return tab;
}

const Tables& tables() {
  static const Tables tab = build_tables();
  return tab;
}

void check_order(int k) {
  if (k < 0 || k > kDebyeMaxOrder) {
    throw DomainError("debye: order " + std::to_string(k) + " outside [0, " +
                      std::to_string(kDebyeMaxOrder) + "]");
  }
}

template <class Real>
Real horner(const std::vector<Real>& c, Real x) {
  Real acc = 0;
  for (std::size_t i = c.size(); i-- > 0;) {
    acc = acc * x + c[i];
  }
  return acc;
}

template <class Real>
const std::vector<std::vector<Real>>& u_table();
template <>
const std::vector<std::vector<double>>& u_table<double>() { return tables().u_d; }
template <>
const std::vector<std::vector<long double>>& u_table<long double>() { return tables().u_ld; }

template <class Real>
const std::vector<std::vector<Real>>& v_table();
template <>
const std::vector<std::vector<double>>& v_table<double>() { return tables().v_d; }
template <>
const std::vector<std::vector<long double>>& v_table<long double>() { return tables().v_ld; }

}  // namespace

const RationalPolynomial& debye_u(int k) {
  check_order(k);
  return tables().u[k];
}

const RationalPolynomial& debye_v(int k) {
  check_order(k);
  return tables().v[k];
}

const RationalPolynomial& debye_D(int k) {
  check_order(k);
  return tables().d[k];
}

RationalPolynomial debye_M(int k, const Rational& alpha) {
  check_order(k);
  static std::mutex mutex;
  static std::map<Rational, std::vector<Poly>> cache;

  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(alpha);
  if (it == cache.end()) {
    const Tables& tab = tables();
    const Poly t = Poly::monomial(1, 1);
    std::vector<Poly> a(kDebyeMaxOrder + 1);
    for (int j = 1; j <= kDebyeMaxOrder; ++j) {
      a[j] = tab.v[j] + t * tab.u[j - 1] * alpha;
    }
    it = cache.emplace(alpha, formal_log(a)).first;
  }
  return it->second[k];
}

double debye_t(double z) {
  if (!(z > 0.0)) throw DomainError("debye_t: z must be positive");
  return 1.0 / std::sqrt(1.0 + z * z);
}

double debye_eta(double z) {
  if (!(z > 0.0)) throw DomainError("debye_eta: z must be positive");
  const double s = std::sqrt(1.0 + z * z);
  return s + std::log(z / (1.0 + s));
}

double debye_eta_derivative(double z) {
  if (!(z > 0.0)) throw DomainError("debye_eta_derivative: z must be positive");
  return std::sqrt(1.0 + z * z) / z;
}

template <class Real>
DebyeSums<Real> debye_sums(Real t, Real nu, int order) {
  check_order(order);
  const auto& ut = u_table<Real>();
  const auto& vt = v_table<Real>();
  const Real inv = Real(1) / nu;
  DebyeSums<Real> s{0, 0, 0, 0, 0};
  Real scale = 1;
  for (int k = 0; k <= order; ++k) {
    const Real uk = horner(ut[k], t) * scale;
    const Real vk = horner(vt[k], t) * scale;
    if (k % 2 == 0) {
      s.u_plus += uk;
      s.u_minus += uk;
      s.v_plus += vk;
      s.v_minus += vk;
    } else {
      s.u_plus += uk;
      s.u_minus -= uk;
      s.v_plus += vk;
      s.v_minus -= vk;
    }
    if (k == order) {
      using std::abs;
      s.last_term = abs(uk);
    }
    scale *= inv;
  }
  return s;
}

template DebyeSums<double> debye_sums<double>(double, double, int);
template DebyeSums<long double> debye_sums<long double>(long double, long double, int);

}  // namespace casimir::specfun
