// Acceptance checks; prints one PASS/FAIL line per criterion and exits
// nonzero if any fails.
#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdarg>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <future>
#include <numbers>
#include <string>
#include <thread>
#include <vector>

#include "casimir/asymptotics/coefficient_functions.hpp"
#include "casimir/asymptotics/expansions.hpp"
#include "casimir/asymptotics/pfa.hpp"
#include "casimir/asymptotics/thermal.hpp"
#include "casimir/energy/exact_energy.hpp"
#include "casimir/modes/modes.hpp"
#include "casimir/selftest/selftest.hpp"
#include "casimir/specfun/bessel.hpp"
#include "casimir/specfun/debye.hpp"
#include "casimir/specfun/gamma_zeta.hpp"

using namespace casimir;
using asymptotics::Regime;
using energy::Geometry;
using energy::TruncationPolicy;
using modes::BoundaryCondition;
using modes::BoundaryPair;
using modes::ChannelSelection;
using modes::Polarization;

namespace {

constexpr BoundaryCondition PC = BoundaryCondition::PerfectlyConducting;
constexpr BoundaryCondition IP = BoundaryCondition::InfinitelyPermeable;
const BoundaryPair kPairs[4] = {{PC, PC}, {IP, IP}, {PC, IP}, {IP, PC}};
const double kPi = std::numbers::pi;

std::string fmt(const char* f, ...) __attribute__((format(printf, 1, 2)));
std::string fmt(const char* f, ...) {
  char buf[512];
  va_list ap;
  va_start(ap, f);
  std::vsnprintf(buf, sizeof buf, f, ap);
  va_end(ap);
  return buf;
}

std::string pair_name(BoundaryPair bc) {
  return modes::to_string(bc.inner) + "-" + modes::to_string(bc.outer);
}

// c0 + c1 x + c2 x^2 through three points
struct Quadratic {
  double c0, c1, c2;
};
Quadratic fit3(const double x[3], const double y[3]) {
  const double d01 = (y[1] - y[0]) / (x[1] - x[0]);
  const double d12 = (y[2] - y[1]) / (x[2] - x[1]);
  const double c2 = (d12 - d01) / (x[2] - x[0]);
  const double c1 = d01 - c2 * (x[0] + x[1]);
  const double c0 = y[0] - c1 * x[0] - c2 * x[0] * x[0];
  return {c0, c1, c2};
}

// Runs fn over [0, n) on a small pool; results land by index.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::future<void>> jobs;
  std::atomic<std::size_t> next{0};
  for (unsigned w = 0; w < std::min<unsigned>(hw, n); ++w)
    jobs.push_back(std::async(std::launch::async, [&] {
      for (std::size_t i; (i = next++) < n;) fn(i);
    }));
  for (auto& j : jobs) j.get();
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

// 1: D=3 pc-pc zero-T leading term
Outcome leading_homogeneous() {
  TruncationPolicy pol;
  pol.rel_tol = 1e-10;
  const double eps[3] = {0.2, 0.1, 0.05};
  double tot[3], te[3], tm[3];
  parallel_for(3, [&](std::size_t i) {
    const auto r = energy::zero_T_energy(Geometry::from_epsilon(eps[i], 3), kPairs[0],
                                         ChannelSelection::Total, pol);
    const double s = std::pow(eps[i], 3);
    tot[i] = s * r.value;
    te[i] = s * r.te;
    tm[i] = s * r.tm;
  });
  const double t = -std::pow(kPi, 3) / 180.0, h = t / 2.0;
  const double a = fit3(eps, tot).c0, b = fit3(eps, te).c0, c = fit3(eps, tm).c0;
  const double worst = std::max({std::abs(a / t - 1), std::abs(b / h - 1), std::abs(c / h - 1)});
  return {worst <= 0.01, fmt("total %.6f te %.6f tm %.6f (targets %.6f, %.6f); max rel dev %.2e",
                             a, b, c, t, h, worst)};
}

// 2: linear coefficient of exact/PFA - 1
Outcome first_correction() {
  const double eps[3] = {0.02, 0.05, 0.1};
  struct Case {
    int D;
    BoundaryPair bc;
    bool hot;
    double slope = 0.0;
  };
  std::vector<Case> cases;
  for (int D : {3, 4, 5})
    for (auto bc : {kPairs[0], kPairs[1]})
      for (bool hot : {false, true}) cases.push_back({D, bc, hot});
  TruncationPolicy pol;
  pol.rel_tol = 1e-11;
  parallel_for(cases.size(), [&](std::size_t k) {
    auto& c = cases[k];
    const auto series = c.hot ? asymptotics::high_T_expansion(c.D, c.bc, ChannelSelection::Total)
                              : asymptotics::zero_T_expansion(c.D, c.bc, ChannelSelection::Total);
    double y[3];
    for (int i = 0; i < 3; ++i) {
      const auto g = Geometry::from_epsilon(eps[i], c.D);
      double exact, pfa;
      if (c.hot) {
        exact = energy::classical_term(g, c.bc, ChannelSelection::Total, pol).value;
        pfa = asymptotics::pfa_energy(g, c.bc, Regime::HighT, 1.0);
      } else {
        exact = energy::zero_T_energy(g, c.bc, ChannelSelection::Total, pol).value;
        pfa = asymptotics::pfa_energy(g, c.bc, Regime::ZeroT, 0.0);
      }
      double r = exact / pfa - 1.0;
      for (const auto& t : series.terms())
        if (t.power == 2) r -= t.coefficient * eps[i] * eps[i] * (t.log_eps ? std::log(eps[i]) : 1.0);
      y[i] = r / eps[i];
    }
    // least squares line y = c1 + c2 eps
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (int i = 0; i < 3; ++i) {
      sx += eps[i];
      sy += y[i];
      sxx += eps[i] * eps[i];
      sxy += eps[i] * y[i];
    }
    c.slope = (sy * sxx - sx * sxy) / (3 * sxx - sx * sx);
  });
  double worst = 0.0;
  std::string where;
  for (const auto& c : cases) {
    const double dev = std::abs(c.slope / (0.5 * (c.D - 1)) - 1.0);
    if (dev > worst) {
      worst = dev;
      where = fmt("D=%d %s %s slope %.5f", c.D, pair_name(c.bc).c_str(), c.hot ? "high-T" : "zero-T",
                  c.slope);
    }
  }
  return {worst <= 0.05, fmt("12 cases; max rel dev %.2e at %s", worst, where.c_str())};
}

// 3: D=3 pc-pc classical term at eps = 1e-2
Outcome classical_homogeneous() {
  TruncationPolicy pol;
  pol.rel_tol = 1e-13;
  const double eps = 1e-2, z3 = specfun::riemann_zeta(3.0);
  const double c = energy::classical_term(Geometry::from_epsilon(eps, 3), kPairs[0],
                                          ChannelSelection::Total, pol).value;
  const double lhs = 2 * eps * eps * c / (-z3);
  const double rhs = 1 + eps + 11.0 / (6.0 * z3) * eps * eps * std::log(eps);
  const double dev = std::abs(lhs - rhs);
  return {dev <= 1e-3, fmt("lhs %.10f series %.10f |diff| %.2e", lhs, rhs, dev)};
}

// 4: D=3 pc-ip zero-T
Outcome leading_mixed() {
  TruncationPolicy pol;
  pol.rel_tol = 1e-10;
  const double eps[3] = {0.2, 0.1, 0.05};
  double y[3];
  parallel_for(3, [&](std::size_t i) {
    y[i] = std::pow(eps[i], 3) *
           energy::zero_T_energy(Geometry::from_epsilon(eps[i], 3), kPairs[2], ChannelSelection::Total, pol)
               .value;
  });
  const auto q = fit3(eps, y);
  const double t = 7 * std::pow(kPi, 3) / 1440.0;
  const double lead = std::abs(q.c0 / t - 1), slope = q.c1 / q.c0;
  return {lead <= 0.01 && std::abs(slope - 1) <= 0.05,
          fmt("leading %.6f (target %.6f, rel dev %.2e); eps coefficient %.4f", q.c0, t, lead, slope)};
}

// 5 and 6: low-temperature correction
struct ThermalData {
  double total[4];  // extrapolated, per pair
  double ratio[2];  // tm/te for pc-pc, pc-ip
  std::string detail;
};
ThermalData thermal_extrapolation() {
  ThermalData out{};
  const double temps[3] = {0.05, 0.08, 0.12};
  TruncationPolicy pol;
  pol.rel_tol = 1e-13;
  double tot[4][3], te[4][3], tm[4][3];
  parallel_for(12, [&](std::size_t k) {
    const std::size_t b = k / 3, i = k % 3;
    const auto r = energy::thermal_correction(Geometry::from_epsilon(0.1, 3), kPairs[b],
                                              ChannelSelection::Total, temps[i], pol);
    const double s = std::pow(temps[i], 4);
    tot[b][i] = r.value / s;
    te[b][i] = r.te / s;
    tm[b][i] = r.tm / s;
  });
  // the correction runs in even powers of T
  const double t2[3] = {temps[0] * temps[0], temps[1] * temps[1], temps[2] * temps[2]};
  for (int b = 0; b < 4; ++b) {
    out.total[b] = fit3(t2, tot[b]).c0;
    out.detail += fmt("%s %.5f ", pair_name(kPairs[b]).c_str(), out.total[b]);
  }
  for (int b : {0, 2}) {
    double r[3];
    for (int i = 0; i < 3; ++i) r[i] = tm[b][i] / te[b][i];
    out.ratio[b / 2] = fit3(t2, r).c0;
  }
  return out;
}

// 7: signs and monotonicity
Outcome sign_suite() {
  struct Point {
    int D;
    BoundaryPair bc;
    double eps, T;
    double e = 0, f = 0;
    std::string err;
  };
  std::vector<Point> pts;
  for (int D : {3, 4, 5})
    for (auto bc : kPairs)
      for (double T : {0.0, 0.5, 10.0})
        for (double eps : {0.05, 0.3, 1.0}) pts.push_back({D, bc, eps, T, 0.0, 0.0, {}});
  TruncationPolicy pol;
  pol.rel_tol = 1e-7;
  parallel_for(pts.size(), [&](std::size_t k) {
    auto& p = pts[k];
    try {
      const auto g = Geometry::from_epsilon(p.eps, p.D);
      p.e = energy::energy(g, p.bc, ChannelSelection::Total, p.T, pol).value;
      p.f = energy::force(g, p.bc, ChannelSelection::Total, p.T, pol).value;
    } catch (const std::exception& e) {
      p.err = e.what();
    }
  });
  int failures = 0;
  std::string first;
  auto fail = [&](const std::string& s) {
    if (failures++ == 0) first = s;
  };
  for (std::size_t k = 0; k < pts.size(); ++k) {
    const auto& p = pts[k];
    const std::string at = fmt("D=%d %s eps=%g T=%g", p.D, pair_name(p.bc).c_str(), p.eps, p.T);
    if (!p.err.empty()) {
      fail(at + ": " + p.err);
      continue;
    }
    const int s = p.bc.homogeneous() ? -1 : 1;
    if (!(s * p.e > 0) || !(s * p.f > 0)) fail(at + fmt(": E %.4g F %.4g", p.e, p.f));
    if (k % 3 != 0 && !(std::abs(p.e) < std::abs(pts[k - 1].e))) fail(at + ": |E| not decreasing");
  }
  return {failures == 0, fmt("%zu points, %d failures", pts.size(), failures) +
                             (failures ? " (first: " + first + ")" : std::string())};
}

// 8: special functions
Outcome special_functions() {
  double wr = 0.0;
  for (double nu : {0.5, 1.0, 1.5, 2.5, 5.0, 10.25, 25.0, 49.5, 50.5, 120.0, 500.0, 2000.0})
    for (double z : {1e-3, 0.01, 0.1, 1.0, 5.0, 10.0, 50.0, 79.0, 81.0, 100.0, 1000.0, 1e4}) {
      const auto b = specfun::bessel_values(nu, z);
      const double w = z * std::exp(b.log_i + b.log_k) * (b.di_over_i - b.dk_over_k);
      wr = std::max(wr, std::abs(w - 1.0));
    }
  using specfun::RationalPolynomial;
  const RationalPolynomial d1({Rational(0), Rational(1, 8), Rational(0), Rational(-5, 24)});
  bool poly = specfun::debye_D(1) == d1;
  for (const Rational& a : {Rational(0), Rational(1, 2), Rational(-1, 2), Rational(1), Rational(3, 2)})
    poly = poly && specfun::debye_M(1, a) ==
                       RationalPolynomial({Rational(0), a - Rational(3, 8), Rational(0), Rational(7, 24)});
  specfun::BesselOptions uni, dir;
  uni.method = specfun::BesselMethod::Uniform;
  dir.method = specfun::BesselMethod::Direct;
  double ov = 0.0;
  for (double nu : {60.0, 100.0, 150.5, 300.0})
    for (double z : {0.1, 0.5, 1.0, 3.0, 10.0})
      for (auto kind : {0, 1}) {
        const double a = kind ? specfun::log_bessel_k(nu, nu * z, uni) : specfun::log_bessel_i(nu, nu * z, uni);
        const double b = kind ? specfun::log_bessel_k(nu, nu * z, dir) : specfun::log_bessel_i(nu, nu * z, dir);
        ov = std::max(ov, std::abs(a - b) / std::abs(b));
      }
  return {wr <= 1e-11 && poly && ov <= 1e-9,
          fmt("wronskian %.2e; D1/M1 exact %s; overlap %.2e", wr, poly ? "yes" : "no", ov)};
}

// 9: degeneracies
Outcome degeneracies() {
  int bad = 0;
  for (int D = 3; D <= 10; ++D) {
    for (auto p : {Polarization::TE, Polarization::TM}) {
      const auto poly = modes::degeneracy_polynomial(p, D);
      for (long l = 1; l <= 50; ++l)
        if (poly.polynomial().evaluate(modes::nu_exact(l, D)) != modes::degeneracy_exact(p, l, D)) ++bad;
      // leading coefficients 2/(D-2)! (tm) and 2/(D-3)! (te)
      const int n = p == Polarization::TM ? D - 2 : D - 3;
      Rational f(1);
      for (int k = 2; k <= n; ++k) f *= k;
      if (poly.coefficient(D - 2) != Rational(2) / f) ++bad;
      if (poly.polynomial().degree() != static_cast<std::size_t>(D - 2)) ++bad;
      if (poly.coefficient(D - 3) != 0) ++bad;
      if (D >= 4) {
        // -(D^2 - 6D + 32)/(12 (D-4)!) and -1/(12 (D-5)!)
        Rational g(1);
        for (int k = 2; k <= D - 4; ++k) g *= k;
        Rational want = p == Polarization::TE ? Rational(-(D * D - 6 * D + 32), 12) / g
                                              : (D == 4 ? Rational(0) : Rational(-(D - 4), 12) / g);
        if (poly.coefficient(D - 4) != want) ++bad;
      }
    }
    if (modes::degeneracy_exact(Polarization::TM, 1, D) != D) ++bad;
    if (modes::degeneracy_exact(Polarization::TE, 1, D) != Rational(D * (D - 1), 2)) ++bad;
  }
  return {bad == 0, fmt("D 3..10, l 1..50; %d mismatches", bad)};
}

// 10: assembly of the zero-T series
Outcome assembly() {
  double worst = 0.0;
  for (int D : {4, 6, 7})
    for (auto bc : kPairs)
      for (auto p : {Polarization::TE, Polarization::TM}) {
        const auto a = asymptotics::assemble_zero_T(D, p, bc);
        const auto s = asymptotics::zero_T_expansion(
            D, bc, p == Polarization::TE ? ChannelSelection::TE : ChannelSelection::TM);
        const double c1 = s.coefficient(1), c2 = s.coefficient(2);
        worst = std::max({worst, std::abs(a.leading / s.prefactor_coefficient() - 1),
                          std::abs(a.c1 - c1) / std::abs(c1), std::abs(a.c2 - c2) / std::abs(c2)});
      }
  bool finite = true;
  double ln2dev = 0.0;
  for (auto bc : {kPairs[2], kPairs[3]})
    for (auto ch : {ChannelSelection::TE, ChannelSelection::TM, ChannelSelection::Total}) {
      const auto s = asymptotics::zero_T_expansion(5, bc, ch);
      for (const auto& t : s.terms()) finite = finite && std::isfinite(t.coefficient);
    }
  // the eta form of (2^5 - 2^4) zeta(1)
  ln2dev = std::abs(32.0 * specfun::dirichlet_eta(1.0) - 32.0 * std::numbers::ln2);
  return {worst <= 1e-10 && finite && ln2dev < 1e-13,
          fmt("max rel dev %.2e; D=5 mixed finite %s; 32 eta(1) - 32 ln 2 = %.1e", worst,
              finite ? "yes" : "no", ln2dev)};
}

// 11: ln eps reading
Outcome log_reading() {
  const auto r = selftest::fit_log_reading();
  std::string s = r.selected == asymptotics::LogReading::EpsSquaredLog ? "eps^2 ln eps" : "ln eps";
  std::string res;
  for (std::size_t i = 0; i < r.eps.size(); ++i)
    res += fmt(" [%g: %.3e vs %.3e]", r.eps[i], r.residual_eps2_log[i], r.residual_as_printed[i]);
  return {r.decisive, "selected " + s + fmt(", improvement %.3g;", r.improvement) + res};
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> only;
  for (int i = 1; i < argc; ++i) only.push_back(std::atoi(argv[i]));
  auto want = [&](int k) { return only.empty() || std::find(only.begin(), only.end(), k) != only.end(); };
  int failed = 0;
  auto report = [&](int k, const char* title, const Outcome& o, double secs) {
    std::printf("%s  %2d  %-42s %s  (%.1fs)\n", o.pass ? "PASS" : "FAIL", k, title, o.detail.c_str(), secs);
    std::fflush(stdout);
    if (!o.pass) ++failed;
  };
  auto timed = [&](int k, const char* title, const std::function<Outcome()>& fn) {
    if (!want(k)) return;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    report(k, title, o, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  };

  timed(1, "zero-T leading term, D=3 pc-pc", leading_homogeneous);
  timed(2, "first correction (D-1)/2", first_correction);
  timed(3, "classical term, D=3 pc-pc", classical_homogeneous);
  timed(4, "zero-T leading term, D=3 pc-ip", leading_mixed);
  if (want(5) || want(6)) {
    const auto t0 = std::chrono::steady_clock::now();
    ThermalData th;
    std::string err;
    try {
      th = thermal_extrapolation();
    } catch (const std::exception& e) {
      err = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const double target = std::pow(kPi, 3) / 15.0;
    if (want(5)) {
      double worst = 0.0;
      for (double v : th.total) worst = std::max(worst, std::abs(v / target - 1));
      report(5, "thermal correction T^4 coefficient, D=3",
             err.empty() ? Outcome{worst <= 0.02, th.detail + fmt("(target %.5f); max rel dev %.2e", target, worst)}
                         : Outcome{false, "exception: " + err},
             secs);
    }
    if (want(6)) {
      const double worst = std::max(std::abs(th.ratio[0] / -2 - 1), std::abs(th.ratio[1] / -2 - 1));
      report(6, "pc-inner tm/te thermal ratio",
             err.empty() ? Outcome{worst <= 0.05, fmt("pc-pc %.4f pc-ip %.4f; max rel dev %.2e", th.ratio[0],
                                                      th.ratio[1], worst)}
                         : Outcome{false, "exception: " + err},
             0.0);
    }
  }
  timed(7, "signs and monotonicity", sign_suite);
  timed(8, "special functions", special_functions);
  timed(9, "degeneracy identities", degeneracies);
  timed(10, "zero-T series assembly", assembly);
  timed(11, "D=3 mixed high-T log term", log_reading);
  std::printf("%s\n", failed ? "acceptance: FAIL" : "acceptance: PASS");
  return failed ? 1 : 0;
}
