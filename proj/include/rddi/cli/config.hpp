#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rddi/bell.hpp"
#include "rddi/coupling.hpp"
#include "rddi/dicke.hpp"

namespace rddi::cli {

inline constexpr const char* kVersion = "1.0.0";
inline constexpr double kMaxPhi = 20.0;

class ConfigError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

enum class Command { Steady, Pulse, Bell, Trace };

const char* to_string(Command command);

struct GridSpec {
  double min = 0.0;
  double max = 0.0;
  int points = 1;

  std::vector<double> values() const;
};

struct RunConfig {
  Command command = Command::Pulse;
  double phi = 0.5;
  std::vector<double> phi_grid;
  TransitionType transition = TransitionType::DeltaMpm1;
  std::optional<Geometry> geometry;
  std::optional<double> omega;
  std::optional<double> delta;
  GridSpec omega_grid{0.0, 10.0, 101};
  GridSpec delta_grid{-15.0, 15.0, 101};
  double duration = 10.0;
  int samples = 200;
  DickeState start = DickeState::Ground;
  Axis axis = Axis::X;
  double step_cap = 1e-2;
  double horizon_periods = 20.0;
  std::string out;
  int jobs = 0;
};

/// Default phi grid for pulse/bell: 0.05, 0.10, ..., 1.00.
std::vector<double> default_phi_grid();

/// "a,b,c" or "start:stop:step" (inclusive of stop within rounding).
std::vector<double> parse_phi_grid(const std::string& text);

/// Parses argv (subcommand plus flags, optionally --config <file> with key=value
/// lines; flags override the file) and validates the result.
/// Throws ConfigError. Returns std::nullopt when only help/version was requested.
std::optional<RunConfig> parse_command_line(int argc, const char* const* argv, std::string& help);

/// Cross-field checks; throws ConfigError.
void validate(const RunConfig& config);

}  // namespace rddi::cli
