#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rddi/bell.hpp"
#include "rddi/pulse.hpp"

namespace rddi {

enum class RowStatus { Ok, InvalidInput, NoMaximum, IntegratorAbort };

const char* to_string(RowStatus status);

struct ScanRow {
  double phi = 0.0;
  Geometry geometry = Geometry::Symmetric;
  TransitionType transition = TransitionType::DeltaMpm1;
  double delta_opt = 0.0;
  double omega_opt = 0.0;
  double duration = 0.0;
  double fidelity = 0.0;
  std::optional<BellResult> bell;
  PhysicalityLog physicality;
  RowStatus status = RowStatus::Ok;
  std::string error;
};

struct ScanSettings {
  PulseSettings pulse;
  TransitionType transition = TransitionType::DeltaMpm1;
  Axis axis = Axis::X;
};

/// Optimal-pulse fidelity per phi. Failures are captured per row.
std::vector<ScanRow> fidelity_scan(std::span<const double> phis, Geometry geometry,
                                   const ScanSettings& settings = {}, int jobs = 0);
std::vector<ScanRow> fidelity_scan_serial(std::span<const double> phis, Geometry geometry,
                                          const ScanSettings& settings = {});

/// As fidelity_scan, plus the Bell functional on each post-pulse state.
std::vector<ScanRow> bell_scan(std::span<const double> phis, Geometry geometry,
                               const ScanSettings& settings = {}, int jobs = 0);
std::vector<ScanRow> bell_scan_serial(std::span<const double> phis, Geometry geometry,
                                      const ScanSettings& settings = {});

}  // namespace rddi
