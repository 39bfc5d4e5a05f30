#pragma once

#include <string>
#include <vector>

#include "casimir/energy/geometry.hpp"
#include "casimir/modes/modes.hpp"

namespace casimir::energy {

struct TruncationPolicy {
  double rel_tol = 1e-9;
  long l_max_hard = 20000;
  long p_max_hard = 1000000;
  bool tail_extrapolation = true;
  // Worker threads for independent l terms; the reduction order is fixed.
  int threads = 1;

  void validate() const;
};

struct EnergyResult {
  double value = 0.0;
  double te = 0.0;
  double tm = 0.0;
  long l_used = 0;
  long p_used = 0;
  double error_estimate = 0.0;
  double temperature = 0.0;
  std::vector<std::string> warnings;
};

// Matsubara sum at T > 0.
EnergyResult free_energy(const Geometry& g, modes::BoundaryPair bc, modes::ChannelSelection channel,
                         double T, const TruncationPolicy& policy = {});

// p = 0 term per unit temperature.
EnergyResult classical_term(const Geometry& g, modes::BoundaryPair bc,
                            modes::ChannelSelection channel, const TruncationPolicy& policy = {});

EnergyResult zero_T_energy(const Geometry& g, modes::BoundaryPair bc,
                           modes::ChannelSelection channel, const TruncationPolicy& policy = {});

// E(T) - E(0), formed term by term in l.
EnergyResult thermal_correction(const Geometry& g, modes::BoundaryPair bc,
                                modes::ChannelSelection channel, double T,
                                const TruncationPolicy& policy = {});

// E(T) for T > 0, E_0 for T = 0.
EnergyResult energy(const Geometry& g, modes::BoundaryPair bc, modes::ChannelSelection channel,
                    double T, const TruncationPolicy& policy = {});

struct ForceResult {
  double value = 0.0;
  double error_estimate = 0.0;
  double step = 0.0;
  std::vector<std::string> warnings;
};

// -dE/dd at fixed a1; negative means attraction.
ForceResult force(const Geometry& g, modes::BoundaryPair bc, modes::ChannelSelection channel,
                  double T, const TruncationPolicy& policy = {});

}  // namespace casimir::energy
