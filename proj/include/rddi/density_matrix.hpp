#pragma once

#include "rddi/types.hpp"

namespace rddi {

struct Tolerances {
  double hermiticity = 1e-10;
  double trace = 1e-10;
  double min_eigenvalue = -1e-9;
};

/// Diagnostics of how far a 4x4 matrix is from being a valid state.
struct Physicality {
  double trace_deviation = 0.0;      // |tr(rho) - 1|
  double hermiticity_deviation = 0.0;  // max_ij |rho_ij - conj(rho_ji)|
  double min_eigenvalue = 0.0;
};

Physicality measure_physicality(const Matrix4& rho);

/// Cheap positivity test: true iff rho + margin * I admits a Cholesky factor,
/// i.e. every eigenvalue of the Hermitian part exceeds -margin.
bool positive_within(const Matrix4& rho, double margin);

/// A validated two-atom density matrix in the product basis.
class DensityMatrix {
public:
  /// |gg><gg|.
  DensityMatrix();

  /// Throws InvariantError when rho violates the tolerances.
  explicit DensityMatrix(const Matrix4& rho, const Tolerances& tol = {});

  static DensityMatrix pure(const Vector4& psi);
  /// Skips validation. Only for maps that provably preserve the state set
  /// (unitary conjugation of an already validated state).
  static DensityMatrix unchecked(const Matrix4& rho);
  static DensityMatrix maximally_mixed();

  /// Column-stacked 16-vector.
  static DensityMatrix from_vectorized(const Vector16& v, const Tolerances& tol = {});
  Vector16 vectorized() const;

  const Matrix4& matrix() const { return rho_; }
  Complex operator()(int row, int col) const { return rho_(row, col); }
  double trace() const { return rho_.trace().real(); }

private:
  struct NoCheck {};
  DensityMatrix(const Matrix4& rho, NoCheck) : rho_(rho) {}

  Matrix4 rho_;
};

Vector16 vectorize(const Matrix4& m);
Matrix4 unvectorize(const Vector16& v);

}  // namespace rddi
