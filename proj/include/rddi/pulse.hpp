#pragma once

#include <vector>

#include "rddi/evolve.hpp"
#include "rddi/optimal_drive.hpp"

namespace rddi {

/// No local maximum of the target population before the search horizon.
class PulseSearchError : public std::runtime_error {
public:
  PulseSearchError(const std::string& what, double horizon)
      : std::runtime_error(what), horizon_(horizon) {}
  double horizon() const { return horizon_; }

private:
  double horizon_;
};

struct PulseSettings {
  IntegratorSettings integrator;
  /// Parabolic refinement stops once successive vertex estimates agree to this.
  double relative_time_accuracy = 1e-4;
  /// Search horizon in generalized Rabi periods of the target transition.
  double horizon_periods = 20.0;
  /// Population samples kept in PulseResult::times/trajectory (decimated).
  std::size_t max_trajectory_points = 2048;
  /// Exact eigenvalue check every this many samples; a Cholesky test covers the rest.
  int eigen_check_stride = 64;
};

struct PulseResult {
  OptimalDrive drive;
  /// Time of the first maximum of the target population (1/gamma).
  double duration = 0.0;
  /// Target population at duration.
  double fidelity = 0.0;
  double sample_interval = 0.0;
  double horizon = 0.0;
  std::vector<double> times;
  std::vector<PopulationVector> trajectory;
  /// State at duration; the drive is switched off there.
  DensityMatrix final_state;
  PhysicalityLog physicality;
};

/// Rabi frequency 2|<target|H|psi_g>| of the targeted transition.
double target_rabi_frequency(const OptimalDrive& od, const CouplingParams& coupling);

/// Residual detuning <target|H|target> - <psi_g|H|psi_g> (zero at the optimum).
double target_detuning(const OptimalDrive& od, const CouplingParams& coupling);

/// Drives |gg> with the optimal constant drive and stops at the first maximum
/// of the target population. Coarse sampling at min(0.01/omega, 0.01/|delta|)
/// locates the maximum; iterated three-point parabolic interpolation refines it.
PulseResult optimal_pulse(const CouplingParams& coupling, Geometry geometry,
                          const PulseSettings& settings = {});

}  // namespace rddi
