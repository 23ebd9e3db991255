#include "rddi/optimal_drive.hpp"

#include <cmath>

namespace rddi {

OptimalDrive optimal_drive(const CouplingParams& coupling, Geometry geometry) {
  OptimalDrive od;
  od.drive.geometry = geometry;
  const double chi = coupling.chi;
  double decay = 0.0;
  if (geometry == Geometry::Symmetric) {
    decay = coupling.gamma_plus();
    od.drive.delta = 0.5 * chi;
    od.target = DickeState::Symmetric;
  } else {
    decay = coupling.gamma_minus();
    od.drive.delta = -0.5 * chi;
    od.target = DickeState::Antisymmetric;
  }
  od.drive.omega = std::sqrt(std::abs(chi) * decay);
  od.hierarchy_holds = std::abs(od.drive.delta) > od.drive.omega && od.drive.omega > decay;
  return od;
}

}  // namespace rddi
