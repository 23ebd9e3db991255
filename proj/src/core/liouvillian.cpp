#include "rddi/liouvillian.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rddi/hamiltonian.hpp"

namespace rddi {

Matrix16 sandwich(const Matrix4& left, const Matrix4& right) {
  // vec(A X B) = (B^T kron A) vec(X)
  Matrix16 m;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      m.block<4, 4>(4 * i, 4 * j) = right(j, i) * left;
    }
  }
  return m;
}

Matrix16 commutator_superoperator(const Matrix4& hamiltonian) {
  const Matrix4 id = Matrix4::Identity();
  return Complex(0.0, -1.0) * (sandwich(hamiltonian, id) - sandwich(id, hamiltonian));
}

Matrix16 collective_dissipator(double g, double gamma) {
  if (!(std::abs(g) <= 1.0)) {
    throw std::domain_error("collective decay factor |g| = " + std::to_string(std::abs(g)) +
                            " exceeds 1; the decay matrix is not positive");
  }
  const Matrix4 id = Matrix4::Identity();
  const Matrix4 lowering[2] = {on_atom(1, sigma_minus()), on_atom(2, sigma_minus())};
  const double rates[2][2] = {{gamma, g * gamma}, {g * gamma, gamma}};

  Matrix16 d = Matrix16::Zero();
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const Matrix4& si = lowering[i];
      const Matrix4 sj_plus = lowering[j].adjoint();
      const Matrix4 number = sj_plus * si;
      d += 0.5 * rates[i][j] *
           (2.0 * sandwich(si, sj_plus) - sandwich(number, id) - sandwich(id, number));
    }
  }
  return d;
}

Liouvillian build_liouvillian(const DriveParams& drive, const CouplingParams& coupling) {
  Liouvillian l;
  l.hamiltonian_part = commutator_superoperator(build_hamiltonian(drive, coupling));
  l.dissipative_part = collective_dissipator(coupling.g, coupling.gamma);
  l.max_rate = std::max({std::abs(drive.delta), drive.omega, std::abs(coupling.chi), coupling.gamma});
  return l;
}

}  // namespace rddi
