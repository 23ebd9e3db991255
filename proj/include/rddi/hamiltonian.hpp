#pragma once

#include "rddi/drive.hpp"

namespace rddi {

// Single-atom operators, basis (|e>, |g>).
using Matrix2 = Eigen::Matrix<Complex, 2, 2>;

Matrix2 sigma_plus();
Matrix2 sigma_minus();
Matrix2 pauli_x();
Matrix2 pauli_y();
Matrix2 pauli_z();

/// Embed a single-atom operator on atom 1 or 2 of the pair.
Matrix4 on_atom(int atom, const Matrix2& op);

Matrix4 kron(const Matrix2& a, const Matrix2& b);

/// Interaction-picture RWA Hamiltonian (hbar = 1):
///   H = 1/2 [ -delta (Z1 + Z2) + Omega1 s1+ + Omega2 s2+ + chi s1+ s2- + h.c. ]
Matrix4 build_hamiltonian(const DriveParams& drive, const CouplingParams& coupling);

}  // namespace rddi
