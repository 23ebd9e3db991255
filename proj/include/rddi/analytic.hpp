#pragma once

#include "rddi/coupling.hpp"
#include "rddi/dicke.hpp"

namespace rddi {

/// Closed-form stationary Dicke populations for symmetric driving (Omega_1 = Omega_2 = omega):
///   D   = (gamma^2 + 4 delta^2 + 2 omega^2)^2
///         + gamma (gamma^2 + 4 delta^2)(f^2 gamma + g^2 gamma + 2 g gamma - 4 f delta)
///   N_e = N_a = omega^4 / D
///   N_s = omega^2 (2 gamma^2 + 8 delta^2 + omega^2) / D
///   N_g = 1 - N_e - N_a - N_s
/// The N_s numerator carries a single factor omega^2; with g = f = 0 this reduces to
/// two independent atoms, N_s = 2x - 3x^2 for x = omega^2 / (gamma^2 + 4 delta^2 + 2 omega^2).
/// Throws std::domain_error if D is not positive.
PopulationVector stationary_populations_analytic(double omega, double delta,
                                                 const CouplingParams& coupling);

}  // namespace rddi
