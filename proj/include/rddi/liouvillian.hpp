#pragma once

#include "rddi/drive.hpp"

namespace rddi {

/// Generator of the master equation on column-stacked density matrices,
/// d vec(rho)/dt = L vec(rho), with L = hamiltonian_part + dissipative_part.
struct Liouvillian {
  Matrix16 hamiltonian_part;
  Matrix16 dissipative_part;
  /// Largest rate scale max(|delta|, Omega, |chi|, gamma); sets the RK4 step bound.
  double max_rate = 1.0;

  Matrix16 matrix() const { return hamiltonian_part + dissipative_part; }
};

/// Superoperator matrix of X -> A X B in column-stacking convention.
Matrix16 sandwich(const Matrix4& left, const Matrix4& right);

/// -i [H, .]
Matrix16 commutator_superoperator(const Matrix4& hamiltonian);

/// sum_ij gamma_ij/2 (2 s_i- rho s_j+ - s_j+ s_i- rho - rho s_j+ s_i-) with
/// gamma_ii = gamma, gamma_12 = gamma_21 = g gamma. Throws std::domain_error for |g| > 1.
Matrix16 collective_dissipator(double g, double gamma = 1.0);

Liouvillian build_liouvillian(const DriveParams& drive, const CouplingParams& coupling);

}  // namespace rddi
