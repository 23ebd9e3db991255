#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rddi/analytic.hpp"
#include "rddi/steady_state.hpp"

namespace rddi {

struct SteadyCell {
  double omega = 0.0;
  double delta = 0.0;
  PopulationVector numeric;
  /// Present for the symmetric geometry only.
  std::optional<PopulationVector> analytic;
  double condition_number = 0.0;
  /// Empty on success; otherwise the solver diagnostic (cell is degenerate).
  std::string error;
};

/// Stationary populations over omega x delta (omega-major order).
/// Reference loop, single-threaded.
std::vector<SteadyCell> steady_grid_serial(const CouplingParams& coupling, Geometry geometry,
                                           std::span<const double> omegas,
                                           std::span<const double> deltas);

/// Same cells and order as steady_grid_serial, evaluated with OpenMP.
/// jobs <= 0 uses the OpenMP default thread count.
std::vector<SteadyCell> steady_grid(const CouplingParams& coupling, Geometry geometry,
                                    std::span<const double> omegas,
                                    std::span<const double> deltas, int jobs = 0);

}  // namespace rddi
