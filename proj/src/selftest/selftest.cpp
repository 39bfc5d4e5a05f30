#include "casimir/selftest/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "casimir/asymptotics/coefficient_functions.hpp"
#include "casimir/asymptotics/pfa.hpp"
#include "casimir/asymptotics/thermal.hpp"
#include "casimir/energy/exact_energy.hpp"
#include "casimir/errors.hpp"
#include "casimir/modes/modes.hpp"
#include "casimir/specfun/bessel.hpp"
#include "casimir/specfun/debye.hpp"

namespace casimir::selftest {

using asymptotics::LogReading;
using asymptotics::Regime;
using modes::BoundaryCondition;
using modes::BoundaryPair;
using modes::ChannelSelection;
using modes::Polarization;

namespace {

constexpr BoundaryCondition PC = BoundaryCondition::PerfectlyConducting;
constexpr BoundaryCondition IP = BoundaryCondition::InfinitelyPermeable;
const BoundaryPair kPairs[4] = {{PC, PC}, {IP, IP}, {PC, IP}, {IP, PC}};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

// PC <-> IP on both spheres
BoundaryPair dual(BoundaryPair bc) {
  auto flip = [](BoundaryCondition b) { return b == PC ? IP : PC; };
  return {flip(bc.inner), flip(bc.outer)};
}

std::string pair_name(BoundaryPair bc) {
  return modes::to_string(bc.inner) + "-" + modes::to_string(bc.outer);
}

class Collector {
 public:
  explicit Collector(std::vector<CheckResult>& out) : out_(out) {}

  template <class F>
  void run(const std::string& suite, const std::string& name, F&& f) {
    CheckResult r{suite, name, false, ""};
    try {
      r.passed = f(r.detail);
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
    }
    out_.push_back(std::move(r));
  }

 private:
  std::vector<CheckResult>& out_;
};

void specfun_checks(Collector& c) {
  c.run("specfun", "wronskian", [](std::string& d) {
    double worst = 0.0;
    for (double nu : {0.5, 1.5, 5.0, 50.5, 500.0})
      for (double z : {0.01, 1.0, 10.0, 100.0}) {
        const auto b = specfun::bessel_values(nu, z);
        const double w = z * std::exp(b.log_i + b.log_k) * (b.di_over_i - b.dk_over_k);
        worst = std::max(worst, std::abs(w - 1.0));
      }
    d = fmt("max residual %.3g", worst);
    return worst <= 1e-11;
  });
  c.run("specfun", "half-integer closed form", [](std::string& d) {
    double worst = 0.0;
    for (double z : {0.1, 1.0, 7.5, 40.0}) {
      const double li = std::log(std::sqrt(2.0 / (std::numbers::pi * z))) + z +
                        std::log(-std::expm1(-2.0 * z) / 2.0);
      const double lk = 0.5 * std::log(std::numbers::pi / (2.0 * z)) - z;
      worst = std::max({worst, std::abs(specfun::log_bessel_i(0.5, z) - li),
                        std::abs(specfun::log_bessel_k(0.5, z) - lk)});
    }
    d = fmt("max log error %.3g", worst);
    return worst <= 1e-13;
  });
  c.run("specfun", "D1 and M1 polynomials", [](std::string& d) {
    using specfun::RationalPolynomial;
    const RationalPolynomial d1({Rational(0), Rational(1, 8), Rational(0), Rational(-5, 24)});
    bool ok = specfun::debye_D(1) == d1;
    for (const Rational& a : {Rational(0), Rational(1, 2), Rational(1, 3), Rational(1)}) {
      const RationalPolynomial m1({Rational(0), a - Rational(3, 8), Rational(0), Rational(7, 24)});
      ok = ok && specfun::debye_M(1, a) == m1;
    }
    d = "D1 = " + specfun::debye_D(1).to_string();
    return ok;
  });
  c.run("specfun", "uniform vs direct overlap", [](std::string& d) {
    specfun::BesselOptions uni, dir;
    uni.method = specfun::BesselMethod::Uniform;
    uni.debye_order = 6;
    dir.method = specfun::BesselMethod::Direct;
    double worst = 0.0;
    for (double nu : {100.0, 150.5, 300.0})
      for (double z : {0.1, 0.5, 1.0, 3.0, 10.0}) {
        const double a = specfun::log_bessel_i(nu, nu * z, uni);
        const double b = specfun::log_bessel_i(nu, nu * z, dir);
        worst = std::max(worst, std::abs(a - b) / std::abs(b));
      }
    d = fmt("max relative log difference %.3g", worst);
    return worst <= 1e-9;
  });
  c.run("specfun", "monotonicity", [](std::string& d) {
    for (double nu : {0.5, 3.5, 60.0, 400.0}) {
      double pi = -INFINITY, pk = INFINITY;
      for (double z = 0.05; z < 500.0; z *= 1.7) {
        const double li = specfun::log_bessel_i(nu, z), lk = specfun::log_bessel_k(nu, z);
        if (!(li > pi) || !(lk < pk)) {
          d = fmt("violated at nu = %g", nu);
          return false;
        }
        pi = li;
        pk = lk;
      }
    }
    return true;
  });
}

void modes_checks(Collector& c) {
  c.run("modes", "degeneracy polynomials", [](std::string& d) {
    for (int D = 3; D <= 10; ++D)
      for (auto p : {Polarization::TE, Polarization::TM}) {
        const auto poly = modes::degeneracy_polynomial(p, D);
        for (long l = 1; l <= 50; ++l)
          if (poly.polynomial().evaluate(modes::nu_exact(l, D)) != modes::degeneracy_exact(p, l, D)) {
            d = "mismatch at D = " + std::to_string(D) + ", l = " + std::to_string(l);
            return false;
          }
      }
    return true;
  });
  c.run("modes", "first multiplet", [](std::string& d) {
    for (int D = 3; D <= 10; ++D)
      if (modes::degeneracy_exact(Polarization::TM, 1, D) != D ||
          modes::degeneracy_exact(Polarization::TE, 1, D) != Rational(D * (D - 1), 2)) {
        d = "D = " + std::to_string(D);
        return false;
      }
    return true;
  });
}

void asymptotics_checks(Collector& c) {
  c.run("asymptotics", "prefactor consistency", [](std::string& d) {
    double worst = 0.0;
    for (int D = 3; D <= 8; ++D)
      for (auto bc : kPairs)
        for (auto ch : {ChannelSelection::TE, ChannelSelection::TM, ChannelSelection::Total}) {
          const auto g = energy::Geometry::from_epsilon(0.01, D);
          const double hz = asymptotics::high_T_expansion(D, bc, ch).prefactor(0.01) * 0.7;
          const double ez = asymptotics::pfa_energy(g, bc, Regime::HighT, 0.7, ch);
          const double zz = asymptotics::zero_T_expansion(D, bc, ch).prefactor(0.01);
          const double pz = asymptotics::pfa_energy(g, bc, Regime::ZeroT, 0.0, ch);
          worst = std::max({worst, std::abs(hz / ez - 1.0), std::abs(zz / pz - 1.0)});
        }
    d = fmt("max relative difference %.3g", worst);
    return worst <= 1e-12;
  });
  c.run("asymptotics", "homogeneous first correction", [](std::string& d) {
    for (int D = 3; D <= 10; ++D)
      for (auto bc : {kPairs[0], kPairs[1]})
        for (auto ch : {ChannelSelection::TE, ChannelSelection::TM, ChannelSelection::Total})
          for (const auto& s : {asymptotics::high_T_expansion(D, bc, ch),
                                asymptotics::zero_T_expansion(D, bc, ch)})
            if (std::abs(s.coefficient(1) - 0.5 * (D - 1)) > 1e-14) {
              d = "D = " + std::to_string(D);
              return false;
            }
    return true;
  });
  c.run("asymptotics", "mixed ordering", [](std::string& d) {
    for (int D = 4; D <= 8; ++D)
      for (double eps : {0.01, 0.05}) {
        const double hp = asymptotics::high_T_expansion(D, {PC, IP}, ChannelSelection::Total).evaluate(eps);
        const double hi = asymptotics::high_T_expansion(D, {IP, PC}, ChannelSelection::Total).evaluate(eps);
        const double zp = asymptotics::zero_T_expansion(D, {PC, IP}, ChannelSelection::Total).evaluate(eps);
        const double zi = asymptotics::zero_T_expansion(D, {IP, PC}, ChannelSelection::Total).evaluate(eps);
        if (!(std::abs(hp) > std::abs(hi)) || !(std::abs(zp) > std::abs(zi))) {
          d = "D = " + std::to_string(D);
          return false;
        }
      }
    return true;
  });
  c.run("asymptotics", "assembly gate", [](std::string& d) {
    double worst = 0.0;
    for (double D : {4.0, 4.3, 5.0, 5.5, 6.0, 7.0, 7.25, 8.0, 9.6, 12.0})
      for (auto bc : kPairs)
        for (auto p : {Polarization::TE, Polarization::TM}) {
          const auto a = asymptotics::assemble_zero_T(D, p, bc);
          double c1 = 0.0, c2 = 0.0;
          for (const auto& t : asymptotics::zero_T_channel_terms(D, bc, p)) {
            if (t.power == 1) c1 += t.coefficient;
            if (t.power == 2) c2 += t.coefficient;
          }
          worst = std::max({worst, std::abs(a.c1 - c1) / std::max(1.0, std::abs(c1)),
                            std::abs(a.c2 - c2) / std::max(1.0, std::abs(c2))});
        }
    d = fmt("max relative difference %.3g", worst);
    return worst <= 1e-10;
  });
  c.run("asymptotics", "D=3 duality", [](std::string& d) {
    for (bool hot : {true, false})
      for (auto bc : kPairs) {
        auto get = [&](BoundaryPair b, ChannelSelection ch) {
          return hot ? asymptotics::high_T_expansion(3, b, ch) : asymptotics::zero_T_expansion(3, b, ch);
        };
        const auto te = get(bc, ChannelSelection::TE);
        const auto tm = get(dual(bc), ChannelSelection::TM);
        for (int k = 0; k <= 2; ++k)
          for (bool lg : {false, true})
            if (std::abs(te.coefficient(k, lg) - tm.coefficient(k, lg)) > 1e-15) {
              d = pair_name(bc);
              return false;
            }
      }
    return true;
  });
  c.run("asymptotics", "D=3 thermal leading term", [](std::string& d) {
    const double target = std::pow(std::numbers::pi, 3) / 15.0;
    double worst = 0.0;
    for (auto inner : {PC, IP})
      worst = std::max(worst, std::abs(asymptotics::thermal_leading(3, inner, ChannelSelection::Total, 1.0, 1.0) / target - 1.0));
    d = fmt("max relative difference %.3g", worst);
    return worst <= 1e-14;
  });
}

void exact_checks(Collector& c) {
  energy::TruncationPolicy pol;
  pol.rel_tol = 1e-8;
  c.run("exact-energy", "signs", [&](std::string& d) {
    for (auto bc : kPairs)
      for (double T : {0.0, 0.5}) {
        const auto g = energy::Geometry::from_epsilon(0.3, 3);
        const double e = energy::energy(g, bc, ChannelSelection::Total, T, pol).value;
        if ((bc.homogeneous() && !(e < 0)) || (!bc.homogeneous() && !(e > 0))) {
          d = pair_name(bc) + fmt(" E = %.6g", e);
          return false;
        }
      }
    return true;
  });
  c.run("exact-energy", "D=3 zero-T against expansion", [&](std::string& d) {
    const auto g = energy::Geometry::from_epsilon(0.05, 3);
    const double e = energy::zero_T_energy(g, kPairs[0], ChannelSelection::Total, pol).value;
    const double s = asymptotics::zero_T_expansion(3, kPairs[0], ChannelSelection::Total).evaluate(0.05);
    d = fmt("relative difference %.3g", e / s - 1.0);
    return std::abs(e / s - 1.0) < 0.01;
  });
  c.run("exact-energy", "channel sum", [&](std::string& d) {
    const auto g = energy::Geometry::from_epsilon(0.2, 4);
    const auto r = energy::zero_T_energy(g, kPairs[2], ChannelSelection::Total, pol);
    d = fmt("relative mismatch %.3g", (r.te + r.tm) / r.value - 1.0);
    return std::abs((r.te + r.tm) / r.value - 1.0) < 1e-14;
  });
}

}  // namespace

bool SelftestReport::all_passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return !log_reading_ran || log_reading.decisive;
}

LogReadingReport fit_log_reading() {
  LogReadingReport rep;
  const BoundaryPair bc{PC, IP};
  const auto sq = asymptotics::high_T_expansion(3, bc, ChannelSelection::Total, LogReading::EpsSquaredLog);
  const auto pr = asymptotics::high_T_expansion(3, bc, ChannelSelection::Total, LogReading::AsPrinted);
  energy::TruncationPolicy pol;
  pol.rel_tol = 1e-13;
  pol.l_max_hard = 2000000;
  double ratio_sq = INFINITY, ratio_pr = INFINITY;
  for (double eps : {1e-2, 1e-3, 1e-4}) {
    const auto g = energy::Geometry::from_epsilon(eps, 3);
    const double r = energy::classical_term(g, bc, ChannelSelection::Total, pol).value / sq.prefactor(eps);
    const double a = r - sq.relative(eps);
    const double b = r - pr.relative(eps);
    rep.eps.push_back(eps);
    rep.exact_relative.push_back(r);
    rep.residual_eps2_log.push_back(a);
    rep.residual_as_printed.push_back(b);
    ratio_sq = std::min(ratio_sq, std::abs(b) / std::abs(a));
    ratio_pr = std::min(ratio_pr, std::abs(a) / std::abs(b));
  }
  if (ratio_sq >= ratio_pr) {
    rep.selected = LogReading::EpsSquaredLog;
    rep.improvement = ratio_sq;
  } else {
    rep.selected = LogReading::AsPrinted;
    rep.improvement = ratio_pr;
  }
  rep.decisive = rep.improvement >= 10.0;
  return rep;
}

SelftestReport run_selftest(const SelftestOptions& options) {
  SelftestReport rep;
  Collector c(rep.checks);
  specfun_checks(c);
  modes_checks(c);
  asymptotics_checks(c);
  if (options.exact_checks) exact_checks(c);
  if (options.log_reading_fit) {
    rep.log_reading = fit_log_reading();
    rep.log_reading_ran = true;
  }
  return rep;
}

std::string format_report(const SelftestReport& report) {
  std::ostringstream os;
  char buf[256];
  for (const auto& c : report.checks) {
    std::snprintf(buf, sizeof buf, "%-6s %-13s %-34s %s\n", c.passed ? "PASS" : "FAIL",
                  c.suite.c_str(), c.name.c_str(), c.detail.c_str());
    os << buf;
  }
  if (report.log_reading_ran) {
    const auto& l = report.log_reading;
    os << "\nD=3 mixed high-T log term (pc-ip, total)\n";
    os << "  eps        exact/PFA              resid(eps^2 ln eps)   resid(ln eps)\n";
    for (std::size_t i = 0; i < l.eps.size(); ++i) {
      std::snprintf(buf, sizeof buf, "  %-9.0e  %.15f  %+.6e         %+.6e\n", l.eps[i],
                    l.exact_relative[i], l.residual_eps2_log[i], l.residual_as_printed[i]);
      os << buf;
    }
    std::snprintf(buf, sizeof buf, "  selected: %s  improvement: %.3g  %s\n",
                  l.selected == LogReading::EpsSquaredLog ? "eps^2 ln eps" : "ln eps", l.improvement,
                  l.decisive ? "PASS" : "FAIL");
    os << buf;
  }
  return os.str();
}

}  // namespace casimir::selftest
