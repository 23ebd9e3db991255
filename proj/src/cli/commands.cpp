#include "rddi/cli/commands.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "rddi/cli/csv.hpp"
#include "rddi/evolve.hpp"
#include "rddi/optimal_drive.hpp"
#include "rddi/scan.hpp"
#include "rddi/steady_grid.hpp"

namespace rddi::cli {

namespace {

std::string join(const std::vector<double>& values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) s += ',';
    s += format_number(values[i]);
  }
  return s;
}

std::string optional_number(const std::optional<double>& v) {
  return v ? format_number(*v) : "unset";
}

// Everything that influences the numbers. --out and --jobs are left out so the
// file content depends only on the physics.
void write_provenance(CsvWriter& w, const RunConfig& c) {
  w.comment(std::string("rddi ") + kVersion);
  w.comment(std::string("command = ") + to_string(c.command));
  w.comment("units: hbar = 1, gamma = 1; times in 1/gamma, frequencies in gamma");
  w.comment("phi = " + format_number(c.phi));
  w.comment("phi_grid = " + (c.phi_grid.empty() ? std::string("unset") : join(c.phi_grid)));
  w.comment(std::string("transition = ") + to_string(c.transition));
  w.comment(std::string("geometry = ") + (c.geometry ? to_string(*c.geometry) : "unset"));
  w.comment("omega = " + optional_number(c.omega));
  w.comment("delta = " + optional_number(c.delta));
  w.comment("omega_grid = " + format_number(c.omega_grid.min) + ":" +
            format_number(c.omega_grid.max) + " x " + std::to_string(c.omega_grid.points));
  w.comment("delta_grid = " + format_number(c.delta_grid.min) + ":" +
            format_number(c.delta_grid.max) + " x " + std::to_string(c.delta_grid.points));
  w.comment("duration = " + format_number(c.duration));
  w.comment("samples = " + std::to_string(c.samples));
  w.comment(std::string("start = ") + to_string(c.start));
  w.comment(std::string("axis = ") + (c.axis == Axis::Y ? "y" : "x"));
  w.comment("step_cap = " + format_number(c.step_cap));
  w.comment("horizon_periods = " + format_number(c.horizon_periods));
}

void write_coupling(CsvWriter& w, const CouplingParams& k) {
  w.comment("coupling: g = " + format_number(k.g) + ", f = " + format_number(k.f) +
            ", chi = " + format_number(k.chi));
}

ScanSettings scan_settings(const RunConfig& c) {
  ScanSettings s;
  s.transition = c.transition;
  s.axis = c.axis;
  s.pulse.integrator.step_cap = c.step_cap;
  s.pulse.horizon_periods = c.horizon_periods;
  return s;
}

void warn_hierarchy(const RunConfig& c, std::ostream& log) {
  for (double phi : c.phi_grid) {
    const auto k = CouplingParams::at(phi, c.transition);
    if (!optimal_drive(k, *c.geometry).hierarchy_holds) {
      log << "warning: phi = " << format_number(phi)
          << ": |delta_opt| > omega_opt > gamma_pm does not hold; optimal parameters are rough\n";
    }
  }
}

int scan_exit_code(const std::vector<ScanRow>& rows, std::ostream& log) {
  int failed = 0;
  bool aborted = false;
  for (const auto& r : rows) {
    if (r.status != RowStatus::Ok) {
      ++failed;
      aborted = aborted || r.status == RowStatus::IntegratorAbort;
      log << "row phi = " << format_number(r.phi) << " failed (" << to_string(r.status)
          << "): " << r.error << '\n';
    }
  }
  if (failed == 0) return kSuccess;
  log << failed << " of " << rows.size() << " rows failed\n";
  return aborted ? kIntegratorAbort : kSolverDegenerate;
}

void populations(CsvWriter& w, const PopulationVector& p) {
  w.field(p.excited).field(p.symmetric).field(p.antisymmetric).field(p.ground);
}

}  // namespace

int cmd_steady(const RunConfig& c, std::ostream& csv, std::ostream& log) {
  const CouplingParams coupling = CouplingParams::at(c.phi, c.transition);
  const Geometry geometry = c.geometry.value_or(Geometry::Symmetric);
  const std::vector<double> omegas = c.omega ? std::vector<double>{*c.omega} : c.omega_grid.values();
  const std::vector<double> deltas = c.delta ? std::vector<double>{*c.delta} : c.delta_grid.values();

  const auto cells = steady_grid(coupling, geometry, omegas, deltas, c.jobs);

  CsvWriter w(csv);
  write_provenance(w, c);
  write_coupling(w, coupling);
  w.columns({{"omega", "Rabi frequency (gamma)"},
             {"delta", "detuning omega_L - omega_a (gamma)"},
             {"N_e", "stationary population of |ee>"},
             {"N_s", "stationary population of the symmetric Dicke state"},
             {"N_a", "stationary population of the antisymmetric Dicke state"},
             {"N_g", "stationary population of |gg>"},
             {"method", "analytic (closed form, symmetric drive) or numeric (Liouvillian null space)"}});

  int degenerate = 0;
  constexpr double nan = std::numeric_limits<double>::quiet_NaN();
  for (const auto& cell : cells) {
    if (cell.analytic) {
      w.field(cell.omega).field(cell.delta);
      populations(w, *cell.analytic);
      w.field("analytic");
      w.end_row();
    }
    w.field(cell.omega).field(cell.delta);
    if (cell.error.empty()) {
      populations(w, cell.numeric);
    } else {
      ++degenerate;
      w.field(nan).field(nan).field(nan).field(nan);
      log << "degenerate cell omega = " << format_number(cell.omega)
          << ", delta = " << format_number(cell.delta) << ": " << cell.error << '\n';
    }
    w.field("numeric");
    w.end_row();
  }
  if (degenerate > 0) {
    log << degenerate << " of " << cells.size() << " cells degenerate\n";
    return kSolverDegenerate;
  }
  return kSuccess;
}

int cmd_pulse(const RunConfig& c, std::ostream& csv, std::ostream& log) {
  warn_hierarchy(c, log);
  const auto rows = fidelity_scan(c.phi_grid, *c.geometry, scan_settings(c), c.jobs);

  CsvWriter w(csv);
  write_provenance(w, c);
  w.columns({{"phi", "dimensionless distance kR"},
             {"geometry", "sym (beam perpendicular to R) or anti (beam along R)"},
             {"delta_opt", "optimal detuning (gamma)"},
             {"omega_opt", "optimal Rabi frequency (gamma)"},
             {"duration", "time of the first maximum of the target population (1/gamma)"},
             {"fidelity", "target Dicke population at duration"},
             {"error", "empty on success"}});
  for (const auto& r : rows) {
    w.field(r.phi).field(to_string(r.geometry)).field(r.delta_opt).field(r.omega_opt);
    w.field(r.duration).field(r.fidelity).field(r.error);
    w.end_row();
  }
  return scan_exit_code(rows, log);
}

int cmd_bell(const RunConfig& c, std::ostream& csv, std::ostream& log) {
  warn_hierarchy(c, log);
  const auto rows = bell_scan(c.phi_grid, *c.geometry, scan_settings(c), c.jobs);

  CsvWriter w(csv);
  write_provenance(w, c);
  w.columns({{"phi", "dimensionless distance kR"},
             {"geometry", "sym or anti; sym states are rotated by pi about z on atom 1 first"},
             {"bell_lhs", "P(0,2pi/3) + P(2pi/3,-2pi/3) + P(0,-2pi/3); local models give >= 1"},
             {"p_diff_1", "P_diff(0, 2pi/3)"},
             {"p_diff_2", "P_diff(2pi/3, -2pi/3)"},
             {"p_diff_3", "P_diff(0, -2pi/3)"},
             {"violated", "bell_lhs < 1"},
             {"error", "empty on success"}});
  constexpr double nan = std::numeric_limits<double>::quiet_NaN();
  for (const auto& r : rows) {
    w.field(r.phi).field(to_string(r.geometry));
    if (r.bell) {
      w.field(r.bell->lhs).field(r.bell->p_diff[0]).field(r.bell->p_diff[1]).field(r.bell->p_diff[2]);
      w.field(r.bell->violated());
    } else {
      w.field(nan).field(nan).field(nan).field(nan).field(false);
    }
    w.field(r.error);
    w.end_row();
  }
  return scan_exit_code(rows, log);
}

int cmd_trace(const RunConfig& c, std::ostream& csv, std::ostream& log) {
  const CouplingParams coupling = CouplingParams::at(c.phi, c.transition);
  const Geometry geometry = c.geometry.value_or(Geometry::Symmetric);
  DriveParams drive;
  std::string mode;
  if (c.omega) {
    drive = DriveParams{*c.omega, *c.delta, geometry};
    mode = "explicit";
  } else {
    drive = optimal_drive(coupling, geometry).drive;
    mode = "optimal";
  }

  EvolveControl control;
  control.samples = c.samples;
  control.integrator.step_cap = c.step_cap;

  Trajectory trajectory;
  try {
    trajectory = evolve(DensityMatrix::pure(dicke_vector(c.start)), build_liouvillian(drive, coupling),
                        c.duration, control);
  } catch (const IntegratorError& e) {
    log << "integrator aborted at t = " << format_number(e.time()) << ": " << e.what() << '\n';
    return kIntegratorAbort;
  }

  CsvWriter w(csv);
  write_provenance(w, c);
  write_coupling(w, coupling);
  w.comment("drive (" + mode + "): omega = " + format_number(drive.omega) +
            ", delta = " + format_number(drive.delta));
  w.columns({{"t", "time (1/gamma)"},
             {"N_e", "population of |ee>"},
             {"N_s", "population of the symmetric Dicke state"},
             {"N_a", "population of the antisymmetric Dicke state"},
             {"N_g", "population of |gg>"},
             {"trace", "Re tr(rho)"},
             {"min_eigenvalue", "smallest eigenvalue of rho"}});
  for (std::size_t k = 0; k < trajectory.times.size(); ++k) {
    const DensityMatrix& rho = trajectory.states[k];
    w.field(trajectory.times[k]);
    populations(w, dicke_populations(rho));
    w.field(rho.trace()).field(measure_physicality(rho.matrix()).min_eigenvalue);
    w.end_row();
  }
  return kSuccess;
}

int run(const RunConfig& config, std::ostream& csv, std::ostream& log) {
  switch (config.command) {
    case Command::Steady:
      return cmd_steady(config, csv, log);
    case Command::Pulse:
      return cmd_pulse(config, csv, log);
    case Command::Bell:
      return cmd_bell(config, csv, log);
    case Command::Trace:
      return cmd_trace(config, csv, log);
  }
  return kConfigError;
}

int main_entry(int argc, const char* const* argv, std::ostream& stdout_stream, std::ostream& log) {
  std::optional<RunConfig> config;
  std::string help;
  try {
    config = parse_command_line(argc, argv, help);
  } catch (const ConfigError& e) {
    log << "error: " << e.what() << '\n';
    return kConfigError;
  }
  if (!config) {
    stdout_stream << help;
    return kSuccess;
  }

  std::ostringstream buffer;
  int code = kSuccess;
  try {
    code = run(*config, buffer, log);
  } catch (const std::exception& e) {
    log << "error: " << e.what() << '\n';
    return kConfigError;
  }

  if (config->out.empty()) {
    stdout_stream << buffer.str();
  } else {
    std::ofstream file(config->out, std::ios::binary | std::ios::trunc);
    if (!file) {
      log << "error: cannot open " << config->out << " for writing\n";
      return kConfigError;
    }
    file << buffer.str();
  }
  return code;
}

}  // namespace rddi::cli
