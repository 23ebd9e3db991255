#include "rddi/cli/config.hpp"

#include <cmath>
#include <map>
#include <sstream>

#include <CLI11.hpp>

namespace rddi::cli {

const char* to_string(Command command) {
  switch (command) {
    case Command::Steady:
      return "steady";
    case Command::Pulse:
      return "pulse";
    case Command::Bell:
      return "bell";
    case Command::Trace:
      return "trace";
  }
  return "?";
}

std::vector<double> GridSpec::values() const {
  if (points <= 1) return {min};
  std::vector<double> v(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    v[i] = min + (max - min) * static_cast<double>(i) / static_cast<double>(points - 1);
  }
  return v;
}

std::vector<double> default_phi_grid() {
  std::vector<double> grid;
  for (int i = 1; i <= 20; ++i) grid.push_back(0.05 * i);
  return grid;
}

namespace {

double parse_double(const std::string& text) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    throw ConfigError("not a number: '" + text + "'");
  }
  while (used < text.size() && std::isspace(static_cast<unsigned char>(text[used]))) ++used;
  if (used != text.size()) throw ConfigError("not a number: '" + text + "'");
  return value;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);
  return parts;
}

}  // namespace

std::vector<double> parse_phi_grid(const std::string& text) {
  std::vector<double> grid;
  if (text.find(':') != std::string::npos) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) throw ConfigError("phi grid range must be start:stop:step");
    const double start = parse_double(parts[0]);
    const double stop = parse_double(parts[1]);
    const double step = parse_double(parts[2]);
    if (!(step > 0.0) || stop < start) throw ConfigError("phi grid range needs step > 0, stop >= start");
    const long n = static_cast<long>(std::floor((stop - start) / step + 1e-9));
    for (long i = 0; i <= n; ++i) grid.push_back(start + step * static_cast<double>(i));
  } else {
    for (const auto& part : split(text, ',')) {
      if (!part.empty()) grid.push_back(parse_double(part));
    }
  }
  if (grid.empty()) throw ConfigError("empty phi grid");
  return grid;
}

void validate(const RunConfig& c) {
  auto check_phi = [](double phi) {
    if (!(phi >= kMinPhi && phi <= kMaxPhi)) {
      std::ostringstream os;
      os << "phi = " << phi << " outside [" << kMinPhi << ", " << kMaxPhi << "]";
      throw ConfigError(os.str());
    }
  };
  check_phi(c.phi);
  for (double phi : c.phi_grid) check_phi(phi);

  if (c.command == Command::Pulse || c.command == Command::Bell) {
    if (!c.geometry) throw ConfigError(std::string(to_string(c.command)) + " requires --geometry");
    if (c.omega || c.delta) {
      throw ConfigError("--omega/--delta cannot be combined with the optimal pulse of " +
                        std::string(to_string(c.command)));
    }
  }
  if (c.command == Command::Trace) {
    if (c.omega.has_value() != c.delta.has_value()) {
      throw ConfigError("trace with an explicit drive needs both --omega and --delta");
    }
    if (!(c.duration > 0.0)) throw ConfigError("--duration must be positive");
    if (c.samples < 1) throw ConfigError("--samples must be at least 1");
  }
  if (c.omega && !(*c.omega >= 0.0)) throw ConfigError("--omega must be >= 0");
  if (c.delta && !std::isfinite(*c.delta)) throw ConfigError("--delta must be finite");
  for (const GridSpec* g : {&c.omega_grid, &c.delta_grid}) {
    if (g->points < 1 || !std::isfinite(g->min) || !std::isfinite(g->max) || g->max < g->min) {
      throw ConfigError("grid bounds need min <= max and at least one point");
    }
  }
  if (c.omega_grid.min < 0.0) throw ConfigError("omega grid must be non-negative");
  if (!(c.step_cap > 0.0)) throw ConfigError("--step-cap must be positive");
  if (!(c.horizon_periods > 0.0)) throw ConfigError("--horizon must be positive");
  if (c.jobs < 0) throw ConfigError("--jobs must be >= 0");
}

std::optional<RunConfig> parse_command_line(int argc, const char* const* argv, std::string& help) {
  CLI::App app{"Entangling two dipole-coupled atoms with shaped laser pulses"};
  app.set_version_flag("--version", kVersion);
  app.set_config("--config", "", "key=value file; command-line flags take precedence");
  app.require_subcommand(1);

  RunConfig c;
  std::string phi_grid;
  std::string transition = "dm1";
  std::string geometry;
  std::string start = "g";
  std::string axis = "x";
  double omega = 0.0;
  double delta = 0.0;

  app.add_option("--phi", c.phi, "dimensionless distance kR (steady, trace)");
  app.add_option("--phi-grid", phi_grid, "phi values: a,b,c or start:stop:step (pulse, bell)");
  app.add_option("--transition", transition, "dm0 or dm1")->check(CLI::IsMember({"dm0", "dm1"}));
  app.add_option("--geometry", geometry, "sym or anti")->check(CLI::IsMember({"sym", "anti"}));
  auto* omega_opt = app.add_option("--omega", omega, "explicit Rabi frequency (units of gamma)");
  auto* delta_opt = app.add_option("--delta", delta, "explicit detuning (units of gamma)");
  app.add_option("--omega-min", c.omega_grid.min, "steady grid lower omega");
  app.add_option("--omega-max", c.omega_grid.max, "steady grid upper omega");
  app.add_option("--omega-points", c.omega_grid.points, "steady grid omega points");
  app.add_option("--delta-min", c.delta_grid.min, "steady grid lower delta");
  app.add_option("--delta-max", c.delta_grid.max, "steady grid upper delta");
  app.add_option("--delta-points", c.delta_grid.points, "steady grid delta points");
  app.add_option("--duration", c.duration, "trace duration (1/gamma)");
  app.add_option("--samples", c.samples, "trace sample intervals");
  app.add_option("--start", start, "trace initial Dicke state: g, e, s, a")
      ->check(CLI::IsMember({"g", "e", "s", "a"}));
  app.add_option("--axis", axis, "Bell measurement rotation axis: x or y")
      ->check(CLI::IsMember({"x", "y"}));
  app.add_option("--step-cap", c.step_cap, "upper bound on the RK4 step (1/gamma)");
  app.add_option("--horizon", c.horizon_periods, "pulse search horizon in Rabi periods");
  app.add_option("--out", c.out, "output CSV path (default stdout)");
  app.add_option("--jobs", c.jobs, "worker threads (0 = OpenMP default)");

  const std::map<std::string, Command> names = {{"steady", Command::Steady},
                                                {"pulse", Command::Pulse},
                                                {"bell", Command::Bell},
                                                {"trace", Command::Trace}};
  app.add_subcommand("steady", "stationary populations over an (omega, delta) grid")->fallthrough();
  app.add_subcommand("pulse", "optimal-pulse fidelity versus phi")->fallthrough();
  app.add_subcommand("bell", "Bell functional of post-pulse states versus phi")->fallthrough();
  app.add_subcommand("trace", "time-resolved Dicke populations")->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    std::ostringstream out;
    std::ostringstream err;
    app.exit(e, out, err);
    help = out.str();
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw ConfigError(e.what());
  }

  c.command = names.at(app.get_subcommands().front()->get_name());
  if (!phi_grid.empty()) {
    c.phi_grid = parse_phi_grid(phi_grid);
  } else if (c.command == Command::Pulse || c.command == Command::Bell) {
    c.phi_grid = default_phi_grid();
  }
  c.transition = transition == "dm0" ? TransitionType::DeltaM0 : TransitionType::DeltaMpm1;
  if (!geometry.empty()) {
    c.geometry = geometry == "sym" ? Geometry::Symmetric : Geometry::Antisymmetric;
  } else if (c.command == Command::Steady || c.command == Command::Trace) {
    c.geometry = Geometry::Symmetric;
  }
  if (omega_opt->count() > 0) c.omega = omega;
  if (delta_opt->count() > 0) c.delta = delta;
  const std::map<std::string, DickeState> states = {{"g", DickeState::Ground},
                                                    {"e", DickeState::Excited},
                                                    {"s", DickeState::Symmetric},
                                                    {"a", DickeState::Antisymmetric}};
  c.start = states.at(start);
  c.axis = axis == "y" ? Axis::Y : Axis::X;

  validate(c);
  return c;
}

}  // namespace rddi::cli
