#include "rddi/hamiltonian.hpp"

#include <cmath>

namespace rddi {

std::pair<Complex, Complex> DriveParams::rabi_frequencies(const CouplingParams& coupling) const {
  const Complex first(omega, 0.0);
  if (geometry == Geometry::Symmetric) {
    return {first, first};
  }
  return {first, omega * std::polar(1.0, -coupling.phi)};
}

Matrix2 sigma_plus() {
  Matrix2 m = Matrix2::Zero();
  m(0, 1) = 1.0;  // |e><g|
  return m;
}

Matrix2 sigma_minus() { return sigma_plus().adjoint(); }

Matrix2 pauli_x() {
  Matrix2 m;
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}

Matrix2 pauli_y() {
  Matrix2 m;
  m << 0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0;
  return m;
}

Matrix2 pauli_z() {
  Matrix2 m;
  m << 1.0, 0.0, 0.0, -1.0;
  return m;
}

Matrix4 kron(const Matrix2& a, const Matrix2& b) {
  Matrix4 m;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      m.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
    }
  }
  return m;
}

Matrix4 on_atom(int atom, const Matrix2& op) {
  if (atom == 1) return kron(op, Matrix2::Identity());
  if (atom == 2) return kron(Matrix2::Identity(), op);
  throw std::invalid_argument("atom index must be 1 or 2");
}

Matrix4 build_hamiltonian(const DriveParams& drive, const CouplingParams& coupling) {
  if (!(drive.omega >= 0.0) || !std::isfinite(drive.delta)) {
    throw std::invalid_argument("drive requires omega >= 0 and finite delta");
  }
  const auto [omega1, omega2] = drive.rabi_frequencies(coupling);
  const Matrix4 s1p = on_atom(1, sigma_plus());
  const Matrix4 s2p = on_atom(2, sigma_plus());
  const Matrix4 s2m = on_atom(2, sigma_minus());

  const Matrix4 raising = omega1 * s1p + omega2 * s2p + coupling.chi * s1p * s2m;
  const Matrix4 detuning = -drive.delta * (on_atom(1, pauli_z()) + on_atom(2, pauli_z()));
  return 0.5 * (detuning + raising + raising.adjoint());
}

}  // namespace rddi
