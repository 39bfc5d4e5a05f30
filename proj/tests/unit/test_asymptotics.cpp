#include <cmath>
#include <numbers>

#include "casimir/asymptotics/coefficient_functions.hpp"
#include "casimir/asymptotics/expansions.hpp"
#include "casimir/asymptotics/pfa.hpp"
#include "casimir/asymptotics/thermal.hpp"
#include "casimir/errors.hpp"
#include "casimir/specfun/gamma_zeta.hpp"
#include "doctest.h"

using namespace casimir;
using namespace casimir::asymptotics;
using modes::BoundaryCondition;
using modes::BoundaryPair;
using modes::ChannelSelection;
using modes::Polarization;

namespace {
constexpr BoundaryCondition PC = BoundaryCondition::PerfectlyConducting;
constexpr BoundaryCondition IP = BoundaryCondition::InfinitelyPermeable;
const double pi = std::numbers::pi;
}

TEST_CASE("parallel plates") {
  // D = 3 zero-T: -pi^2/720 per area
  CHECK(parallel_plate_density(3, {PC, PC}, Regime::ZeroT, 1.0, 0.0) == doctest::Approx(-pi * pi / 720).epsilon(1e-14));
  CHECK(parallel_plate_density(3, {PC, IP}, Regime::ZeroT, 1.0, 0.0) ==
        doctest::Approx(7.0 / 8 * pi * pi / 720).epsilon(1e-14));
  // high T: -zeta(3) T/(8 pi d^2)
  CHECK(parallel_plate_density(3, {IP, IP}, Regime::HighT, 1.0, 1.0) ==
        doctest::Approx(-specfun::riemann_zeta(3) / (8 * pi)).epsilon(1e-14));
  CHECK(channel_weight(5, ChannelSelection::TE) == doctest::Approx(0.75));
}

TEST_CASE("pfa prefactors") {
  const auto g = energy::Geometry::from_epsilon(0.01, 3);
  CHECK(pfa_energy(g, {PC, PC}, Regime::ZeroT, 0.0) * 1e-6 == doctest::Approx(-std::pow(pi, 3) / 180).epsilon(1e-13));
  CHECK(pfa_energy(g, {PC, PC}, Regime::ZeroT, 0.0, ChannelSelection::TE) * 1e-6 ==
        doctest::Approx(-std::pow(pi, 3) / 360).epsilon(1e-13));
  CHECK(pfa_coefficient(3, {PC, IP}, Regime::ZeroT) == doctest::Approx(7 * std::pow(pi, 3) / 1440).epsilon(1e-13));
}

TEST_CASE("D=3 homogeneous series") {
  const auto s = zero_T_expansion(3, {PC, PC}, ChannelSelection::Total);
  CHECK(s.prefactor_coefficient() == doctest::Approx(-std::pow(pi, 3) / 180));
  CHECK(s.coefficient(1) == doctest::Approx(1.0));
  const auto h = high_T_expansion(3, {PC, PC}, ChannelSelection::Total);
  CHECK(h.coefficient(1) == doctest::Approx(1.0));
  CHECK(h.coefficient(2, true) == doctest::Approx(11.0 / (6 * specfun::riemann_zeta(3))));
  CHECK(h.prefactor_coefficient() == doctest::Approx(-specfun::riemann_zeta(3) / 2));
}

TEST_CASE("D=3 mixed log reading") {
  const auto a = high_T_expansion(3, {PC, IP}, ChannelSelection::Total, LogReading::EpsSquaredLog);
  const auto b = high_T_expansion(3, {PC, IP}, ChannelSelection::Total, LogReading::AsPrinted);
  bool sq = false, bare = false;
  for (const auto& t : a.terms()) sq = sq || (t.log_eps && t.power == 2);
  for (const auto& t : b.terms()) bare = bare || (t.log_eps && t.power == 0);
  CHECK(sq);
  CHECK(bare);
  CHECK(a.coefficient(2, true) == doctest::Approx(b.coefficient(0, true)));
  CHECK(std::abs(a.coefficient(2, true)) > 0);
  CHECK(a.coefficient(2, true) / high_T_expansion(3, {PC, IP}, ChannelSelection::Total).coefficient(2, true) == 1.0);
}

TEST_CASE("first correction is universal") {
  for (int D = 3; D <= 9; ++D)
    for (auto bc : {BoundaryPair{PC, PC}, BoundaryPair{IP, IP}}) {
      CHECK(zero_T_expansion(D, bc, ChannelSelection::Total).coefficient(1) == doctest::Approx(0.5 * (D - 1)));
      CHECK(high_T_expansion(D, bc, ChannelSelection::Total).coefficient(1) == doctest::Approx(0.5 * (D - 1)));
    }
}

TEST_CASE("total is the weighted channel sum") {
  for (int D : {4, 5, 8})
    for (auto bc : {BoundaryPair{PC, IP}, BoundaryPair{IP, PC}})
      for (bool hot : {false, true}) {
        auto get = [&](ChannelSelection c) { return hot ? high_T_expansion(D, bc, c) : zero_T_expansion(D, bc, c); };
        const double eps = 0.02;
        CHECK(get(ChannelSelection::Total).evaluate(eps) ==
              doctest::Approx(get(ChannelSelection::TE).evaluate(eps) + get(ChannelSelection::TM).evaluate(eps))
                  .epsilon(1e-13));
      }
}

TEST_CASE("series errors") {
  CHECK_THROWS_AS(zero_T_expansion(3, {PC, PC}, ChannelSelection::Total).evaluate(0.6), OutOfRegimeError);
  CHECK_THROWS_AS(zero_T_expansion(2, {PC, PC}, ChannelSelection::Total), UnsupportedDimensionError);
  CHECK_THROWS_AS(high_T_expansion(17, {PC, PC}, ChannelSelection::Total), UnsupportedDimensionError);
  CHECK_THROWS_AS(coefficient_A(1.0), PoleError);
  CHECK_THROWS_AS(assemble_zero_T(3.0, Polarization::TE, {PC, PC}), DomainError);
}

TEST_CASE("D=5 mixed uses ln 2") {
  const auto s = zero_T_expansion(5, {PC, IP}, ChannelSelection::TE);
  for (const auto& t : s.terms()) CHECK(std::isfinite(t.coefficient));
  const auto near = zero_T_channel_terms(5.0 + 1e-7, {PC, IP}, Polarization::TE);
  double c2 = 0.0;
  for (const auto& t : near)
    if (t.power == 2) c2 += t.coefficient;
  CHECK(s.coefficient(2) == doctest::Approx(c2).epsilon(1e-5));
}

TEST_CASE("assembly reproduces the printed series") {
  for (double D : {4.0, 6.0, 7.0, 5.5})
    for (auto bc : {BoundaryPair{PC, PC}, BoundaryPair{IP, IP}, BoundaryPair{PC, IP}, BoundaryPair{IP, PC}})
      for (auto p : {Polarization::TE, Polarization::TM}) {
        const auto a = assemble_zero_T(D, p, bc);
        double c1 = 0, c2 = 0;
        for (const auto& t : zero_T_channel_terms(D, bc, p)) {
          if (t.power == 1) c1 += t.coefficient;
          if (t.power == 2) c2 += t.coefficient;
        }
        CHECK(a.c1 == doctest::Approx(c1).epsilon(1e-10));
        CHECK(a.c2 == doctest::Approx(c2).epsilon(1e-10));
      }
}

TEST_CASE("thermal leading term") {
  const double t = std::pow(pi, 3) / 15;
  CHECK(thermal_leading(3, PC, ChannelSelection::Total, 1.0, 1.0) == doctest::Approx(t));
  CHECK(thermal_leading(3, IP, ChannelSelection::Total, 1.0, 1.0) == doctest::Approx(t));
  CHECK(thermal_leading(3, PC, ChannelSelection::TM, 1.0, 1.0) /
            thermal_leading(3, PC, ChannelSelection::TE, 1.0, 1.0) ==
        doctest::Approx(-2.0));
  // T^(D+1) scaling
  CHECK(thermal_leading(4, IP, ChannelSelection::TE, 1.0, 0.2) ==
        doctest::Approx(thermal_leading(4, IP, ChannelSelection::TE, 1.0, 1.0) * std::pow(0.2, 5)));
  CHECK(pfa_thermal_force(3, 1.0, 1.0) < 0.0);
  CHECK(exact_thermal_force_leading(3, PC, 1.0, 1.0) / pfa_thermal_force(3, 1.0, 1.0) == doctest::Approx(2.25));
}
