#pragma once

#include "casimir/energy/geometry.hpp"
#include "casimir/modes/modes.hpp"

namespace casimir::asymptotics {

enum class Regime { ZeroT, HighT };

// Fraction of the total carried by a channel: (D-2)/(D-1) for TE, 1/(D-1) for TM.
double channel_weight(int D, modes::ChannelSelection channel);

// Leading parallel-plate free energy per unit area at separation d.
double parallel_plate_density(int D, modes::BoundaryPair bc, Regime regime, double d, double T);

// Plate density times the area of the sphere of radius a1.
double pfa_energy(const energy::Geometry& g, modes::BoundaryPair bc, Regime regime, double T,
                  modes::ChannelSelection channel = modes::ChannelSelection::Total);

// c such that pfa_energy = c / (a1 eps^D) at zero T, or c T / eps^(D-1) at high T.
double pfa_coefficient(int D, modes::BoundaryPair bc, Regime regime,
                       modes::ChannelSelection channel = modes::ChannelSelection::Total);

}  // namespace casimir::asymptotics
