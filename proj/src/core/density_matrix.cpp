#include "rddi/density_matrix.hpp"

#include <sstream>

namespace rddi {

Vector16 vectorize(const Matrix4& m) {
  Vector16 v;
  for (int col = 0; col < 4; ++col) {
    for (int row = 0; row < 4; ++row) {
      v(4 * col + row) = m(row, col);
    }
  }
  return v;
}

Matrix4 unvectorize(const Vector16& v) {
  Matrix4 m;
  for (int col = 0; col < 4; ++col) {
    for (int row = 0; row < 4; ++row) {
      m(row, col) = v(4 * col + row);
    }
  }
  return m;
}

Physicality measure_physicality(const Matrix4& rho) {
  Physicality p;
  p.trace_deviation = std::abs(rho.trace() - Complex(1.0, 0.0));
  p.hermiticity_deviation = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
  const Matrix4 hermitian = 0.5 * (rho + rho.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix4> solver(hermitian, Eigen::EigenvaluesOnly);
  p.min_eigenvalue = solver.eigenvalues().minCoeff();
  return p;
}

bool positive_within(const Matrix4& rho, double margin) {
  // Unrolled Cholesky of the Hermitian part (lower triangle) of rho + margin * I.
  Complex l[4][4];
  for (int j = 0; j < 4; ++j) {
    double d = rho(j, j).real() + margin;
    for (int k = 0; k < j; ++k) d -= std::norm(l[j][k]);
    if (!(d > 0.0)) return false;
    const double ljj = std::sqrt(d);
    l[j][j] = ljj;
    for (int i = j + 1; i < 4; ++i) {
      Complex s = 0.5 * (rho(i, j) + std::conj(rho(j, i)));
      for (int k = 0; k < j; ++k) s -= l[i][k] * std::conj(l[j][k]);
      l[i][j] = s / ljj;
    }
  }
  return true;
}

DensityMatrix::DensityMatrix() : rho_(Matrix4::Zero()) { rho_(3, 3) = 1.0; }

DensityMatrix::DensityMatrix(const Matrix4& rho, const Tolerances& tol) : rho_(rho) {
  const Physicality p = measure_physicality(rho_);
  if (p.trace_deviation > tol.trace || p.hermiticity_deviation > tol.hermiticity ||
      p.min_eigenvalue < tol.min_eigenvalue || !rho_.allFinite()) {
    std::ostringstream os;
    os << "not a density matrix: |tr-1| = " << p.trace_deviation
       << ", max|rho-rho^+| = " << p.hermiticity_deviation
       << ", min eigenvalue = " << p.min_eigenvalue;
    throw InvariantError(os.str());
  }
}

DensityMatrix DensityMatrix::pure(const Vector4& psi) {
  const Vector4 unit = psi / psi.norm();
  return DensityMatrix(unit * unit.adjoint());
}

DensityMatrix DensityMatrix::unchecked(const Matrix4& rho) { return DensityMatrix(rho, NoCheck{}); }

DensityMatrix DensityMatrix::maximally_mixed() {
  return DensityMatrix(Matrix4::Identity() * 0.25);
}

DensityMatrix DensityMatrix::from_vectorized(const Vector16& v, const Tolerances& tol) {
  return DensityMatrix(unvectorize(v), tol);
}

Vector16 DensityMatrix::vectorized() const { return vectorize(rho_); }

}  // namespace rddi
