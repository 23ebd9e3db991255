#include "rddi/steady_state.hpp"

#include <algorithm>
#include <sstream>

namespace rddi {

SteadyStateResult solve_steady_state(const Liouvillian& liouvillian,
                                     const SteadyStateOptions& options) {
  using Matrix17x16 = Eigen::Matrix<Complex, 17, 16>;
  using Vector17 = Eigen::Matrix<Complex, 17, 1>;

  const Matrix16 l = liouvillian.matrix();
  Matrix17x16 system;
  system.topRows<16>() = l;
  system.row(16) = vectorize(Matrix4::Identity()).transpose();
  Vector17 rhs = Vector17::Zero();
  rhs(16) = 1.0;

  Eigen::JacobiSVD<Matrix17x16> svd(system, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double condition = sv(0) / sv(sv.size() - 1);
  if (!(condition <= options.max_condition)) {
    std::ostringstream os;
    os << "stationary subspace is degenerate or ill-conditioned (condition number " << condition
       << " > " << options.max_condition << ")";
    throw SolverError(os.str());
  }

  const Vector16 x = svd.solve(rhs);
  const double residual = (l * x).norm();
  const double bound = options.residual_tolerance * std::max(1.0, liouvillian.max_rate);
  if (!(residual <= bound)) {
    std::ostringstream os;
    os << "steady-state residual " << residual << " exceeds " << bound;
    throw SolverError(os.str());
  }

  try {
    return {DensityMatrix::from_vectorized(x), condition, residual};
  } catch (const InvariantError& e) {
    throw SolverError(std::string("steady state is not physical: ") + e.what());
  }
}

}  // namespace rddi
