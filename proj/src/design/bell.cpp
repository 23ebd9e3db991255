#include "rddi/bell.hpp"

#include <cmath>
#include <numbers>

namespace rddi {

Matrix2 spin_rotation(Axis axis, double angle) {
  Matrix2 sigma;
  switch (axis) {
    case Axis::X:
      sigma = pauli_x();
      break;
    case Axis::Y:
      sigma = pauli_y();
      break;
    case Axis::Z:
      sigma = pauli_z();
      break;
  }
  // sigma^2 = 1, so the exponential is exact in closed form.
  return std::cos(0.5 * angle) * Matrix2::Identity() -
         Complex(0.0, std::sin(0.5 * angle)) * sigma;
}

namespace {

Matrix4 rotate(const Matrix4& rho, const Matrix4& u) { return u * rho * u.adjoint(); }

}  // namespace

DensityMatrix local_rotation(const DensityMatrix& rho, int atom, Axis axis, double angle) {
  return DensityMatrix::unchecked(rotate(rho.matrix(), on_atom(atom, spin_rotation(axis, angle))));
}

double p_diff(const DensityMatrix& rho, double angle1, double angle2, Axis axis) {
  const Matrix4 u = kron(spin_rotation(axis, angle1), spin_rotation(axis, angle2));
  const Matrix4 r = rotate(rho.matrix(), u);
  // |eg> and |ge> are the anti-aligned outcomes
  return r(1, 1).real() + r(2, 2).real();
}

BellResult bell_lhs(const DensityMatrix& rho, Geometry geometry, Axis axis) {
  const DensityMatrix measured =
      geometry == Geometry::Symmetric ? local_rotation(rho, 1, Axis::Z, std::numbers::pi) : rho;
  constexpr double third = 2.0 * std::numbers::pi / 3.0;
  BellResult r;
  r.p_diff = {p_diff(measured, 0.0, third, axis), p_diff(measured, third, -third, axis),
              p_diff(measured, 0.0, -third, axis)};
  r.lhs = r.p_diff[0] + r.p_diff[1] + r.p_diff[2];
  return r;
}

}  // namespace rddi
