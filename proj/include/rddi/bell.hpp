#pragma once

#include <array>

#include "rddi/density_matrix.hpp"
#include "rddi/hamiltonian.hpp"

namespace rddi {

enum class Axis { X, Y, Z };

/// exp(-i angle sigma_axis / 2)
Matrix2 spin_rotation(Axis axis, double angle);

/// (U x I) rho (U x I)^+ for atom 1, (I x U) rho (I x U)^+ for atom 2.
DensityMatrix local_rotation(const DensityMatrix& rho, int atom, Axis axis, double angle);

/// Probability that the two z measurements disagree after atom 1 is rotated by
/// angle1 and atom 2 by angle2 about the same axis.
double p_diff(const DensityMatrix& rho, double angle1, double angle2, Axis axis = Axis::X);

struct BellResult {
  /// P(0, 2pi/3) + P(2pi/3, -2pi/3) + P(0, -2pi/3). Local models give >= 1.
  double lhs = 0.0;
  std::array<double, 3> p_diff{};

  bool violated() const { return lhs < 1.0; }
};

/// Three-angle Bell functional. For the symmetric geometry atom 1 is first
/// rotated by pi about z, which maps psi_s onto psi_a.
BellResult bell_lhs(const DensityMatrix& rho, Geometry geometry, Axis axis = Axis::X);

}  // namespace rddi
