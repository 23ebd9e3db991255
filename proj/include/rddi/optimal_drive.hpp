#pragma once

#include "rddi/dicke.hpp"
#include "rddi/drive.hpp"

namespace rddi {

/// Drive tuned to one entangled Dicke state:
///   symmetric beam     -> psi_s, delta = +chi/2, omega = sqrt(|chi| (1+g) gamma)
///   antisymmetric beam -> psi_a, delta = -chi/2, omega = sqrt(|chi| (1-g) gamma)
/// delta keeps the sign of chi, which puts the laser on the target resonance
/// whichever sign f takes.
struct OptimalDrive {
  DriveParams drive;
  DickeState target = DickeState::Symmetric;
  /// |delta| > omega > gamma_pm. Holds only at small distances; callers may warn.
  bool hierarchy_holds = false;
};

OptimalDrive optimal_drive(const CouplingParams& coupling, Geometry geometry);

}  // namespace rddi
