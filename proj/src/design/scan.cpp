#include "rddi/scan.hpp"

#include <omp.h>

#include <limits>

namespace rddi {

const char* to_string(RowStatus status) {
  switch (status) {
    case RowStatus::Ok:
      return "ok";
    case RowStatus::InvalidInput:
      return "invalid_input";
    case RowStatus::NoMaximum:
      return "no_maximum";
    case RowStatus::IntegratorAbort:
      return "integrator_abort";
  }
  return "unknown";
}

namespace {

ScanRow evaluate_row(double phi, Geometry geometry, const ScanSettings& settings, bool with_bell) {
  constexpr double nan = std::numeric_limits<double>::quiet_NaN();
  ScanRow row;
  row.phi = phi;
  row.geometry = geometry;
  row.transition = settings.transition;
  row.delta_opt = row.omega_opt = row.duration = row.fidelity = nan;
  try {
    const CouplingParams coupling = CouplingParams::at(phi, settings.transition);
    const OptimalDrive od = optimal_drive(coupling, geometry);
    row.delta_opt = od.drive.delta;
    row.omega_opt = od.drive.omega;
    const PulseResult pulse = optimal_pulse(coupling, geometry, settings.pulse);
    row.duration = pulse.duration;
    row.fidelity = pulse.fidelity;
    row.physicality = pulse.physicality;
    if (with_bell) row.bell = bell_lhs(pulse.final_state, geometry, settings.axis);
  } catch (const PulseSearchError& e) {
    row.status = RowStatus::NoMaximum;
    row.error = e.what();
  } catch (const IntegratorError& e) {
    row.status = RowStatus::IntegratorAbort;
    row.error = e.what();
  } catch (const std::exception& e) {
    row.status = RowStatus::InvalidInput;
    row.error = e.what();
  }
  return row;
}

std::vector<ScanRow> run_serial(std::span<const double> phis, Geometry geometry,
                                const ScanSettings& settings, bool with_bell) {
  std::vector<ScanRow> rows;
  rows.reserve(phis.size());
  for (double phi : phis) rows.push_back(evaluate_row(phi, geometry, settings, with_bell));
  return rows;
}

std::vector<ScanRow> run_parallel(std::span<const double> phis, Geometry geometry,
                                  const ScanSettings& settings, bool with_bell, int jobs) {
  const long n = static_cast<long>(phis.size());
  std::vector<ScanRow> rows(phis.size());
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
  // Row cost varies by orders of magnitude with phi; hand rows out one at a time.
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (long i = 0; i < n; ++i) {
    rows[i] = evaluate_row(phis[i], geometry, settings, with_bell);
  }
  return rows;
}

}  // namespace

std::vector<ScanRow> fidelity_scan(std::span<const double> phis, Geometry geometry,
                                   const ScanSettings& settings, int jobs) {
  return run_parallel(phis, geometry, settings, false, jobs);
}

std::vector<ScanRow> fidelity_scan_serial(std::span<const double> phis, Geometry geometry,
                                          const ScanSettings& settings) {
  return run_serial(phis, geometry, settings, false);
}

std::vector<ScanRow> bell_scan(std::span<const double> phis, Geometry geometry,
                               const ScanSettings& settings, int jobs) {
  return run_parallel(phis, geometry, settings, true, jobs);
}

std::vector<ScanRow> bell_scan_serial(std::span<const double> phis, Geometry geometry,
                                      const ScanSettings& settings) {
  return run_serial(phis, geometry, settings, true);
}

}  // namespace rddi
