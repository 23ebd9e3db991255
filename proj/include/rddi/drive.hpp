#pragma once

#include <utility>

#include "rddi/coupling.hpp"

namespace rddi {

/// Rectangular laser drive. omega is the (real, non-negative) Rabi magnitude,
/// delta = omega_L - omega_a.
struct DriveParams {
  double omega = 0.0;
  double delta = 0.0;
  Geometry geometry = Geometry::Symmetric;

  /// Per-atom complex Rabi frequencies. The antisymmetric beam runs along the
  /// interatomic axis, so atom 2 lags by the propagation phase phi.
  std::pair<Complex, Complex> rabi_frequencies(const CouplingParams& coupling) const;
};

}  // namespace rddi
