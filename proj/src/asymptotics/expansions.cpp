#include "casimir/asymptotics/expansions.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <tuple>
#include <utility>

#include "casimir/errors.hpp"
#include "casimir/specfun/gamma_zeta.hpp"

namespace casimir::asymptotics {

using modes::BoundaryCondition;
using modes::BoundaryPair;
using modes::ChannelSelection;
using specfun::dirichlet_eta;
using specfun::riemann_zeta;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPi2 = kPi * kPi;
constexpr double kLn2 = std::numbers::ln2;

using Terms = std::vector<SeriesTerm>;

void check_dim(int D) {
  if (D < kMinExpansionDim || D > kMaxExpansionDim)
    throw UnsupportedDimensionError("expansion: D = " + std::to_string(D) +
                                    " outside supported range 3..16");
}

Terms universal_high_T(double D) {
  return {{0, false, 1.0, "1"},
          {1, false, 0.5 * (D - 1.0), "(D-1)/2"},
          {2, false, (3.0 * D - 8.0) * (D - 1.0) / 24.0, "(3D-8)(D-1)/24"}};
}

Terms universal_zero_T(double D) {
  return {{0, false, 1.0, "1"},
          {1, false, 0.5 * (D - 1.0), "(D-1)/2"},
          {2, false, (D - 1.0) * (3.0 * D * D - 2.0 * D - 17.0) / (24.0 * (D + 2.0)),
           "(D-1)(3D^2-2D-17)/(24(D+2))"}};
}

// (2^D - 2^k) zeta(D-k+1) / ((2^D - c) zeta(s)) written through eta, finite at D = k, k + 1.
double eta_ratio(double D, int k, double c, double s) {
  const double p = std::pow(2.0, D);
  return p * dirichlet_eta(D - k + 1.0) / ((p - c) * riemann_zeta(s));
}

Terms high_T_homogeneous_channel(double D, modes::Polarization pol) {
  if (D == 3.0)
    return {{0, false, 1.0, "1"},
            {1, false, 1.0, "(D-1)/2"},
            {2, true, 11.0 / (6.0 * riemann_zeta(3.0)), "11/(6 zeta(3))"}};
  Terms t = universal_high_T(D);
  const double z = riemann_zeta(D - 2.0) / riemann_zeta(D);
  if (pol == modes::Polarization::TE)
    t.push_back({2, false, -(D * D - 6.0 * D + 32.0) / (6.0 * (D - 2.0)) * z,
                 "-(D^2-6D+32)/(6(D-2)) zeta(D-2)/zeta(D)"});
  else
    t.push_back({2, false, -(D - 4.0) / 6.0 * z, "-(D-4)/6 zeta(D-2)/zeta(D)"});
  return t;
}

// pc_inner: inner sphere perfectly conducting.
Terms high_T_mixed_channel(double D, modes::Polarization pol, bool pc_inner, LogReading reading) {
  const bool te = pol == modes::Polarization::TE;
  if (D == 3.0) {
    // swapping the boundaries swaps TE and TM
    const double s = (te == pc_inner) ? -1.0 : 1.0;
    Terms t{{0, false, 1.0, "1"}, {1, false, 1.0, "(D-1)/2"}};
    t.push_back({1, false, s * 8.0 * kLn2 / (3.0 * riemann_zeta(3.0)), "8 ln2/(3 zeta(3))"});
    t.push_back({reading == LogReading::EpsSquaredLog ? 2 : 0, true,
                 -2.0 / (3.0 * riemann_zeta(3.0)), "-2/(3 zeta(3))"});
    return t;
  }
  Terms t = universal_high_T(D);
  const double h1 = eta_ratio(D, 3, 2.0, D);
  const double h3 = eta_ratio(D, 5, 2.0, D);
  const double s = pc_inner ? 1.0 : -1.0;
  const char* h1o = "(2^D-8)zeta(D-2)/((2^D-2)zeta(D))";
  const char* h3o = "(2^D-32)zeta(D-4)/((2^D-2)zeta(D))";
  if (te) {
    t.push_back({1, false, s * 2.0 * (D - 4.0) / (D - 2.0) * h1, std::string("2(D-4)/(D-2) ") + h1o});
    if (pc_inner)
      t.push_back({2, false, (5.0 * D * D - 30.0 * D + 16.0) / (6.0 * (D - 2.0)) * h1,
                   std::string("(5D^2-30D+16)/(6(D-2)) ") + h1o});
    else
      t.push_back({2, false, -(7.0 * D * D - 42.0 * D + 80.0) / (6.0 * (D - 2.0)) * h1,
                   std::string("-(7D^2-42D+80)/(6(D-2)) ") + h1o});
    t.push_back({2, false, 2.0 * (D - 4.0) * (D - 4.0) / ((D - 2.0) * (D - 3.0)) * h3,
                 std::string("2(D-4)^2/((D-2)(D-3)) ") + h3o});
  } else {
    t.push_back({1, false, s * 2.0 * h1, std::string("2 ") + h1o});
    if (pc_inner)
      t.push_back({2, false, (5.0 * D - 8.0) / 6.0 * h1, std::string("(5D-8)/6 ") + h1o});
    else
      t.push_back({2, false, -(7.0 * D - 16.0) / 6.0 * h1, std::string("-(7D-16)/6 ") + h1o});
    t.push_back({2, false, 2.0 * (D - 2.0) / (D - 3.0) * h3, std::string("2(D-2)/(D-3) ") + h3o});
  }
  return t;
}

Terms zero_T_homogeneous_channel(double D, modes::Polarization pol, bool pc, bool fitted) {
  const bool te = pol == modes::Polarization::TE;
  if (D == 3.0) {
    Terms t{{0, false, 1.0, "1"}, {1, false, 1.0, "(D-1)/2"}, {2, false, 1.0 / 15.0, "1/15"}};
    if (te == pc)
      t.push_back({2, false, -5.0 / (4.0 * kPi2), "-5/(4 pi^2)"});
    else
      t.push_back({2, false, 19.0 / (4.0 * kPi2), "19/(4 pi^2)"});
    if (fitted) t.push_back({2, false, -55.0 / (4.0 * kPi2), "-55/(4 pi^2) fitted"});
    return t;
  }
  Terms t = universal_zero_T(D);
  const double z = riemann_zeta(D - 1.0) / riemann_zeta(D + 1.0);
  const std::string zo = " zeta(D-1)/zeta(D+1)";
  const double d2 = D * D, d3 = d2 * D, d4 = d3 * D;
  if (pc && te)
    t.push_back({2, false,
                 -(d4 - 4 * d3 + 20 * d2 + 76 * D - 21) / (6 * D * (D - 1) * (D + 2)) * z,
                 "-(D^4-4D^3+20D^2+76D-21)/(6D(D-1)(D+2))" + zo});
  else if (pc)
    t.push_back({2, false,
                 -(d4 - 4 * d3 - 16 * d2 + 4 * D + 87) / (6 * D * (D + 2) * (D - 1)) * z,
                 "-(D^4-4D^3-16D^2+4D+87)/(6D(D+2)(D-1))" + zo});
  else if (te)
    t.push_back({2, false, -(d3 - 3 * d2 + 29 * D + 57) / (6 * D * (D + 2)) * z,
                 "-(D^3-3D^2+29D+57)/(6D(D+2))" + zo});
  else
    t.push_back({2, false, -(d2 - 7) * (D - 3) / (6 * D * (D + 2)) * z,
                 "-(D^2-7)(D-3)/(6D(D+2))" + zo});
  return t;
}

Terms zero_T_mixed_channel(double D, modes::Polarization pol, bool pc_inner, bool fitted) {
  const bool te = pol == modes::Polarization::TE;
  if (D == 3.0) {
    const double s = (te == pc_inner) ? -1.0 : 1.0;
    Terms t{{0, false, 1.0, "1"}, {1, false, 1.0, "(D-1)/2"}};
    t.push_back({1, false, s * 40.0 / (7.0 * kPi2), "40/(7 pi^2)"});
    t.push_back({2, false, 1.0 / 15.0, "1/15"});
    if (s < 0)
      t.push_back({2, false, -13.0 / (7.0 * kPi2), "-13/(7 pi^2)"});
    else
      t.push_back({2, false, 27.0 / (7.0 * kPi2), "27/(7 pi^2)"});
    t.push_back({2, false, 192.0 / (7.0 * kPi2 * kPi2), "192/(7 pi^4)"});
    if (fitted) t.push_back({2, false, -55.0 / (7.0 * kPi2), "-55/(7 pi^2) fitted"});
    return t;
  }
  const double d2 = D * D, d3 = d2 * D, d4 = d3 * D;
  Terms t = universal_zero_T(D);
  const double r1 = eta_ratio(D, 2, 1.0, D + 1.0);
  const double r3 = eta_ratio(D, 4, 1.0, D + 1.0);
  const std::string r1o = " (2^D-4)zeta(D-1)/((2^D-1)zeta(D+1))";
  const std::string r3o = " (2^D-16)zeta(D-3)/((2^D-1)zeta(D+1))";
  const double s = pc_inner ? 1.0 : -1.0;
  if (te) {
    t.push_back({1, false, s * 2 * (d2 - 4 * D + 1) / (D * (D - 1)) * r1, "2(D^2-4D+1)/(D(D-1))" + r1o});
    if (pc_inner)
      t.push_back({2, false, (5 * d3 - 15 * d2 - 59 * D - 15) / (6 * D * (D + 2)) * r1,
                   "(5D^3-15D^2-59D-15)/(6D(D+2))" + r1o});
    else
      t.push_back({2, false,
                   -(7 * d4 - 28 * d3 + 8 * d2 + 148 * D - 63) / (6 * D * (D - 1) * (D + 2)) * r1,
                   "-(7D^4-28D^3+8D^2+148D-63)/(6D(D-1)(D+2))" + r1o});
    t.push_back({2, false,
                 2 * (d4 - 6 * d3 + 2 * d2 + 28 * D - 13) / (D * (D - 1) * (D - 2) * (D + 2)) * r3,
                 "2(D^4-6D^3+2D^2+28D-13)/(D(D-1)(D-2)(D+2))" + r3o});
  } else {
    t.push_back({1, false, s * 2 * (d2 - 2 * D - 1) / (D * (D - 1)) * r1, "2(D^2-2D-1)/(D(D-1))" + r1o});
    if (pc_inner)
      t.push_back({2, false, (5 * d3 - 3 * d2 - 23 * D + 9) / (6 * D * (D + 2)) * r1,
                   "(5D^3-3D^2-23D+9)/(6D(D+2))" + r1o});
    else
      t.push_back({2, false,
                   -(7 * d4 - 16 * d3 - 40 * d2 + 64 * D + 57) / (6 * D * (D - 1) * (D + 2)) * r1,
                   "-(7D^4-16D^3-40D^2+64D+57)/(6D(D-1)(D+2))" + r1o});
    t.push_back({2, false,
                 2 * (D + 1) * (d3 - 3 * d2 - 3 * D + 11) / ((D - 1) * (D - 2) * D * (D + 2)) * r3,
                 "2(D+1)(D^3-3D^2-3D+11)/((D-1)(D-2)D(D+2))" + r3o});
  }
  return t;
}

Terms channel_terms(Regime regime, double D, BoundaryPair bc, modes::Polarization pol,
                    LogReading reading, ZeroTReading zero_reading = ZeroTReading::Fitted) {
  const bool pc_inner = bc.inner == BoundaryCondition::PerfectlyConducting;
  if (regime == Regime::HighT)
    return bc.homogeneous() ? high_T_homogeneous_channel(D, pol)
                            : high_T_mixed_channel(D, pol, pc_inner, reading);
  const bool fitted = zero_reading == ZeroTReading::Fitted;
  return bc.homogeneous() ? zero_T_homogeneous_channel(D, pol, pc_inner, fitted)
                          : zero_T_mixed_channel(D, pol, pc_inner, fitted);
}

// Total relative series: TE and TM weighted by their share of the PFA prefactor.
Terms combine(int D, const Terms& te, const Terms& tm) {
  const double wte = (D - 2.0) / (D - 1.0);
  const double wtm = 1.0 / (D - 1.0);
  std::map<std::tuple<int, bool, std::string>, double> acc;
  std::vector<std::tuple<int, bool, std::string>> order;
  auto add = [&](const Terms& ts, double w) {
    for (const auto& t : ts) {
      auto key = std::make_tuple(t.power, t.log_eps, t.origin);
      auto [it, fresh] = acc.try_emplace(key, 0.0);
      if (fresh) order.push_back(key);
      it->second += w * t.coefficient;
    }
  };
  add(te, wte);
  add(tm, wtm);
  Terms out;
  for (const auto& key : order) {
    const double c = acc[key];
    if (std::abs(c) < 1e-15) continue;
    out.push_back({std::get<0>(key), std::get<1>(key), c, std::get<2>(key)});
  }
  std::stable_sort(out.begin(), out.end(), [](const SeriesTerm& a, const SeriesTerm& b) {
    return a.power < b.power;
  });
  return out;
}

ExpansionSeries build(Regime regime, int D, BoundaryPair bc, ChannelSelection channel,
                      LogReading reading, ZeroTReading zero_reading) {
  check_dim(D);
  Terms terms;
  if (channel == ChannelSelection::Total)
    terms = combine(D, channel_terms(regime, D, bc, modes::Polarization::TE, reading, zero_reading),
                    channel_terms(regime, D, bc, modes::Polarization::TM, reading, zero_reading));
  else
    terms = channel_terms(regime, D, bc,
                          channel == ChannelSelection::TE ? modes::Polarization::TE
                                                          : modes::Polarization::TM,
                          reading, zero_reading);
  return ExpansionSeries(regime, bc, channel, D, pfa_coefficient(D, bc, regime, channel),
                         std::move(terms));
}

}  // namespace

ExpansionSeries::ExpansionSeries(Regime regime, BoundaryPair bc, ChannelSelection channel, int D,
                                 double prefactor_coefficient, std::vector<SeriesTerm> terms)
    : regime_(regime), bc_(bc), channel_(channel), dim_(D), coef_(prefactor_coefficient),
      terms_(std::move(terms)) {}

double ExpansionSeries::prefactor(double eps, double a1) const {
  if (!(eps > 0.0)) throw DomainError("ExpansionSeries: eps must be positive");
  if (regime_ == Regime::ZeroT) return coef_ / (a1 * std::pow(eps, dim_));
  return coef_ / std::pow(eps, dim_ - 1);
}

double ExpansionSeries::relative(double eps) const {
  if (!(eps > 0.0)) throw DomainError("ExpansionSeries: eps must be positive");
  const double le = std::log(eps);
  double s = 0.0;
  for (const auto& t : terms_) {
    double v = t.coefficient * std::pow(eps, t.power);
    if (t.log_eps) v *= le;
    s += v;
  }
  return s;
}

double ExpansionSeries::evaluate(double eps, double a1, double T) const {
  if (eps > 0.5) throw OutOfRegimeError("ExpansionSeries: eps > 0.5 is outside the asymptotic regime");
  const double v = prefactor(eps, a1) * relative(eps);
  return regime_ == Regime::HighT ? v * T : v;
}

double ExpansionSeries::coefficient(int power, bool log_eps) const {
  double s = 0.0;
  for (const auto& t : terms_)
    if (t.power == power && t.log_eps == log_eps) s += t.coefficient;
  return s;
}

ExpansionSeries high_T_expansion(int D, BoundaryPair bc, ChannelSelection channel,
                                 LogReading reading) {
  return build(Regime::HighT, D, bc, channel, reading, ZeroTReading::Fitted);
}

ExpansionSeries zero_T_expansion(int D, BoundaryPair bc, ChannelSelection channel,
                                 ZeroTReading reading) {
  return build(Regime::ZeroT, D, bc, channel, LogReading::EpsSquaredLog, reading);
}

std::vector<SeriesTerm> zero_T_channel_terms(double D, BoundaryPair bc, modes::Polarization pol) {
  if (!(D > 3.0) || D > kMaxExpansionDim)
    throw UnsupportedDimensionError("zero_T_channel_terms: D must lie in (3, 16]");
  return channel_terms(Regime::ZeroT, D, bc, pol, LogReading::EpsSquaredLog);
}

}  // namespace casimir::asymptotics
