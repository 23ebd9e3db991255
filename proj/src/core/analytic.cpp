#include "rddi/analytic.hpp"

#include <stdexcept>

namespace rddi {

PopulationVector stationary_populations_analytic(double omega, double delta,
                                                 const CouplingParams& coupling) {
  const double gamma = coupling.gamma;
  const double g = coupling.g;
  const double f = coupling.f;
  const double w2 = omega * omega;
  const double width = gamma * gamma + 4.0 * delta * delta;

  const double saturated = width + 2.0 * w2;
  const double denominator =
      saturated * saturated +
      gamma * width * (f * f * gamma + g * g * gamma + 2.0 * g * gamma - 4.0 * f * delta);
  if (!(denominator > 0.0)) {
    throw std::domain_error("stationary population denominator is not positive");
  }

  PopulationVector n;
  n.excited = w2 * w2 / denominator;
  n.antisymmetric = n.excited;
  n.symmetric = w2 * (2.0 * gamma * gamma + 8.0 * delta * delta + w2) / denominator;
  n.ground = 1.0 - n.excited - n.antisymmetric - n.symmetric;
  return n;
}

}  // namespace rddi
