#pragma once

#include "rddi/types.hpp"

namespace rddi {

/// Atomic transition driven by the laser, with the quantization axis along the
/// interatomic separation. Determines the (p, q) weights of the near/far field
/// terms in the coupling functions.
enum class TransitionType { DeltaM0, DeltaMpm1 };

struct FieldWeights {
  int p;
  int q;
};

FieldWeights field_weights(TransitionType transition);
const char* to_string(TransitionType transition);

/// Smallest dimensionless distance accepted. Below it |f| exceeds ~1e9.
inline constexpr double kMinPhi = 1e-3;

/// Collective decay factor g(phi): gamma_12 = g * gamma.
double coupling_g(double phi, TransitionType transition = TransitionType::DeltaMpm1);

/// Dipole-dipole shift factor f(phi): chi = f * gamma.
double coupling_f(double phi, TransitionType transition = TransitionType::DeltaMpm1);

/// Interatomic geometry and the rates derived from it, in units of gamma.
struct CouplingParams {
  double phi = 0.5;
  TransitionType transition = TransitionType::DeltaMpm1;
  double g = 0.0;
  double f = 0.0;
  double gamma = 1.0;
  double chi = 0.0;

  static CouplingParams at(double phi, TransitionType transition = TransitionType::DeltaMpm1);

  double gamma_plus() const { return (1.0 + g) * gamma; }
  double gamma_minus() const { return (1.0 - g) * gamma; }
};

}  // namespace rddi
