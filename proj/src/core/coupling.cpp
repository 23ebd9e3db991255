#include "rddi/coupling.hpp"

#include <cmath>
#include <string>

namespace rddi {

const char* to_string(Geometry geometry) {
  return geometry == Geometry::Symmetric ? "sym" : "anti";
}

FieldWeights field_weights(TransitionType transition) {
  switch (transition) {
    case TransitionType::DeltaM0:
      return {0, 2};
    case TransitionType::DeltaMpm1:
      return {1, -1};
  }
  return {1, -1};
}

const char* to_string(TransitionType transition) {
  return transition == TransitionType::DeltaM0 ? "dm0" : "dm1";
}

namespace {

void check_phi(double phi) {
  if (!(phi >= kMinPhi) || !std::isfinite(phi)) {
    throw std::domain_error("dimensionless distance phi = " + std::to_string(phi) +
                            " is below the minimum " + std::to_string(kMinPhi));
  }
}

// (sin x - x cos x) / x^3. The direct form loses ~|log10 x^2| digits to
// cancellation, so small arguments use the Taylor series
//   sum_{n>=1} (-1)^(n+1) 2n x^(2n-2) / (2n+1)!
double near_field_term(double x) {
  if (x < 0.1) {
    const double x2 = x * x;
    double term = 1.0 / 3.0;  // n = 1
    double sum = term;
    double factorial = 6.0;   // (2n+1)!
    double power = 1.0;       // x^(2n-2)
    for (int n = 2; n <= 8; ++n) {
      factorial *= (2.0 * n) * (2.0 * n + 1.0);
      power *= -x2;
      term = 2.0 * n * power / factorial;
      sum += term;
    }
    return sum;
  }
  return (std::sin(x) - x * std::cos(x)) / (x * x * x);
}

}  // namespace

double coupling_g(double phi, TransitionType transition) {
  check_phi(phi);
  const auto [p, q] = field_weights(transition);
  return 1.5 * (p * std::sin(phi) / phi + q * near_field_term(phi));
}

double coupling_f(double phi, TransitionType transition) {
  check_phi(phi);
  const auto [p, q] = field_weights(transition);
  const double c = std::cos(phi);
  const double s = std::sin(phi);
  return 1.5 * (p * c / phi + q * c / (phi * phi * phi) + q * s / (phi * phi));
}

CouplingParams CouplingParams::at(double phi, TransitionType transition) {
  CouplingParams c;
  c.phi = phi;
  c.transition = transition;
  c.g = coupling_g(phi, transition);
  c.f = coupling_f(phi, transition);
  c.gamma = 1.0;
  c.chi = c.f * c.gamma;
  return c;
}

}  // namespace rddi
