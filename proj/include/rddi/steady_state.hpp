#pragma once

#include "rddi/density_matrix.hpp"
#include "rddi/liouvillian.hpp"

namespace rddi {

struct SteadyStateOptions {
  /// Condition numbers above this mark the stationary subspace as degenerate.
  double max_condition = 1e12;
  /// Bound on ||L vec(rho)||, scaled by max(1, max_rate).
  double residual_tolerance = 1e-10;
};

struct SteadyStateResult {
  DensityMatrix state;
  double condition_number = 0.0;
  double residual = 0.0;
};

/// Least-squares solution of the 17 equations {L vec(rho) = 0, tr(rho) = 1}.
/// Throws SolverError when the system is degenerate or the residual is too large.
SteadyStateResult solve_steady_state(const Liouvillian& liouvillian,
                                     const SteadyStateOptions& options = {});

inline DensityMatrix steady_state(const Liouvillian& liouvillian) {
  return solve_steady_state(liouvillian).state;
}

}  // namespace rddi
