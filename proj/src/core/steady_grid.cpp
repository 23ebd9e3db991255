#include "rddi/steady_grid.hpp"

#include <omp.h>

namespace rddi {

namespace {

SteadyCell solve_cell(const CouplingParams& coupling, Geometry geometry, double omega,
                      double delta) {
  SteadyCell cell;
  cell.omega = omega;
  cell.delta = delta;
  const DriveParams drive{omega, delta, geometry};
  try {
    const SteadyStateResult r = solve_steady_state(build_liouvillian(drive, coupling));
    cell.numeric = dicke_populations(r.state);
    cell.condition_number = r.condition_number;
  } catch (const SolverError& e) {
    cell.error = e.what();
  }
  if (geometry == Geometry::Symmetric) {
    try {
      cell.analytic = stationary_populations_analytic(omega, delta, coupling);
    } catch (const std::domain_error& e) {
      if (cell.error.empty()) cell.error = e.what();
    }
  }
  return cell;
}

}  // namespace

std::vector<SteadyCell> steady_grid_serial(const CouplingParams& coupling, Geometry geometry,
                                           std::span<const double> omegas,
                                           std::span<const double> deltas) {
  std::vector<SteadyCell> cells;
  cells.reserve(omegas.size() * deltas.size());
  for (double omega : omegas) {
    for (double delta : deltas) {
      cells.push_back(solve_cell(coupling, geometry, omega, delta));
    }
  }
  return cells;
}

std::vector<SteadyCell> steady_grid(const CouplingParams& coupling, Geometry geometry,
                                    std::span<const double> omegas,
                                    std::span<const double> deltas, int jobs) {
  const long n_delta = static_cast<long>(deltas.size());
  const long total = static_cast<long>(omegas.size()) * n_delta;
  std::vector<SteadyCell> cells(static_cast<std::size_t>(total));
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();

#pragma omp parallel for schedule(dynamic, 16) num_threads(threads)
  for (long idx = 0; idx < total; ++idx) {
    cells[idx] = solve_cell(coupling, geometry, omegas[idx / n_delta], deltas[idx % n_delta]);
  }
  return cells;
}

}  // namespace rddi
