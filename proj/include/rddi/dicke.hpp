#pragma once

#include <array>

#include "rddi/density_matrix.hpp"

namespace rddi {

enum class DickeState { Excited, Symmetric, Antisymmetric, Ground };

const char* to_string(DickeState state);

/// psi_e = |ee>, psi_s = (|ge> + |eg>)/sqrt2, psi_a = (|ge> - |eg>)/sqrt2, psi_g = |gg>.
Vector4 dicke_vector(DickeState state);

/// Columns are psi_e, psi_s, psi_a, psi_g.
Matrix4 dicke_basis();

/// Occupations of the four Dicke states.
struct PopulationVector {
  double excited = 0.0;
  double symmetric = 0.0;
  double antisymmetric = 0.0;
  double ground = 0.0;

  double operator[](DickeState state) const;
  double sum() const { return excited + symmetric + antisymmetric + ground; }
  std::array<double, 4> as_array() const { return {excited, symmetric, antisymmetric, ground}; }
};

PopulationVector dicke_populations(const Matrix4& rho);
inline PopulationVector dicke_populations(const DensityMatrix& rho) {
  return dicke_populations(rho.matrix());
}

/// Single Dicke occupation <psi|rho|psi>, read straight from a vectorized state.
double dicke_population(const Vector16& vec_rho, DickeState state);

}  // namespace rddi
