#pragma once

#include <string>
#include <vector>

#include "casimir/asymptotics/pfa.hpp"
#include "casimir/modes/modes.hpp"

namespace casimir::asymptotics {

// How the ln(eps) term of the D = 3 mixed high-T series is read.
enum class LogReading { EpsSquaredLog, AsPrinted };

// D = 3 zero-T eps^2 constants: with the shift fitted to the exact energy
// (-55/(4 pi^2) homogeneous, -55/(7 pi^2) mixed, both channels) or as printed.
enum class ZeroTReading { Fitted, AsPrinted };

struct SeriesTerm {
  int power = 0;
  bool log_eps = false;
  double coefficient = 0.0;
  std::string origin;
};

class ExpansionSeries {
 public:
  ExpansionSeries(Regime regime, modes::BoundaryPair bc, modes::ChannelSelection channel, int D,
                  double prefactor_coefficient, std::vector<SeriesTerm> terms);

  Regime regime() const noexcept { return regime_; }
  modes::BoundaryPair bc() const noexcept { return bc_; }
  modes::ChannelSelection channel() const noexcept { return channel_; }
  int dimension() const noexcept { return dim_; }
  const std::vector<SeriesTerm>& terms() const noexcept { return terms_; }

  // c in c/(a1 eps^D) at zero T, or c/eps^(D-1) per unit T at high T.
  double prefactor_coefficient() const noexcept { return coef_; }
  double prefactor(double eps, double a1 = 1.0) const;
  // Sum of the relative terms.
  double relative(double eps) const;
  // prefactor * relative, times T for the high-T series. Throws OutOfRegimeError for eps > 0.5.
  double evaluate(double eps, double a1 = 1.0, double T = 1.0) const;
  // Sum of coefficients with the given power and log flag.
  double coefficient(int power, bool log_eps = false) const;

 private:
  Regime regime_;
  modes::BoundaryPair bc_;
  modes::ChannelSelection channel_;
  int dim_;
  double coef_;
  std::vector<SeriesTerm> terms_;
};

inline constexpr int kMinExpansionDim = 3;
inline constexpr int kMaxExpansionDim = 16;

// Classical (p = 0) term per unit T.
ExpansionSeries high_T_expansion(int D, modes::BoundaryPair bc, modes::ChannelSelection channel,
                                 LogReading reading = LogReading::EpsSquaredLog);

ExpansionSeries zero_T_expansion(int D, modes::BoundaryPair bc, modes::ChannelSelection channel,
                                 ZeroTReading reading = ZeroTReading::Fitted);

// Relative zero-T channel terms with D as a real parameter, D > 3.
std::vector<SeriesTerm> zero_T_channel_terms(double D, modes::BoundaryPair bc, modes::Polarization pol);

}  // namespace casimir::asymptotics
