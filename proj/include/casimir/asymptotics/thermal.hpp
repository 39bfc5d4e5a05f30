#pragma once

#include "casimir/modes/modes.hpp"

namespace casimir::asymptotics {

// Leading low-T term of E(T) - E(0); depends only on the inner sphere.
double thermal_leading(int D, modes::BoundaryCondition inner, modes::ChannelSelection channel,
                       double a1, double T);

// Thermal force from the PFA, and the leading thermal force -dE/da1 of the exact result.
double pfa_thermal_force(int D, double a1, double T);
double exact_thermal_force_leading(int D, modes::BoundaryCondition inner, double a1, double T);

}  // namespace casimir::asymptotics
