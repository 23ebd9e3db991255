// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "cli_helpers.hpp"
#include "oracles.hpp"
#include "rddi/analytic.hpp"
#include "rddi/bell.hpp"
#include "rddi/dicke.hpp"
#include "rddi/evolve.hpp"
#include "rddi/scan.hpp"
#include "rddi/steady_grid.hpp"

using namespace rddi;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, double a, double b = 0, double c = 0, double d = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c, d);
  return buf;
}

std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) v[i] = a + (b - a) * i / (n - 1);
  return v;
}

// Trajectories from criteria 2-5 are pooled here for criterion 6.
PhysicalityLog pooled;

Outcome steady_equivalence() {
  const auto omegas = linspace(0.1, 5.0, 10);
  const auto deltas = linspace(-10.0, 10.0, 10);
  double worst = 0.0;
  int cells = 0;
  for (double phi : {0.3, 0.5, 1.0, 2.0}) {
    const auto k = CouplingParams::at(phi);
    for (const auto& cell : steady_grid(k, Geometry::Symmetric, omegas, deltas)) {
      if (!cell.error.empty() || !cell.analytic) return {false, "cell failed: " + cell.error};
      for (int i = 0; i < 4; ++i)
        worst = std::max(worst, std::abs(cell.numeric.as_array()[i] - cell.analytic->as_array()[i]));
      ++cells;
    }
  }
  return {cells == 400 && worst < 1e-8, fmt("%.0f cells, max |numeric - closed form| = %.2e", cells, worst)};
}

Outcome decay_rates() {
  double worst = 0.0;
  for (double phi : {0.3, 0.5, 1.0}) {
    const auto k = CouplingParams::at(phi);
    const auto l = build_liouvillian({0.0, 0.0, Geometry::Symmetric}, k);
    for (auto s : {DickeState::Symmetric, DickeState::Antisymmetric}) {
      const double expected = s == DickeState::Symmetric ? k.gamma_plus() : k.gamma_minus();
      const auto traj = evolve(DensityMatrix::pure(dicke_vector(s)), l, 2.0 / expected);
      pooled.merge(traj.physicality);
      std::vector<double> n;
      for (const auto& rho : traj.states) n.push_back(dicke_populations(rho)[s]);
      const double fitted = oracle::fitted_decay_rate(traj.times, n);
      worst = std::max(worst, std::abs(fitted / expected - 1.0));
    }
  }
  return {worst < 1e-3, fmt("6 fits, max relative rate error = %.2e", worst)};
}

Outcome bell_reference() {
  const double pure = bell_lhs(DensityMatrix::pure(dicke_vector(DickeState::Antisymmetric)),
                               Geometry::Antisymmetric).lhs;
  const double mixed = bell_lhs(DensityMatrix::maximally_mixed(), Geometry::Antisymmetric).lhs;
  return {std::abs(pure - 0.75) < 1e-10 && std::abs(mixed - 1.5) < 1e-10,
          fmt("psi_a -> %.15f, I/4 -> %.15f", pure, mixed)};
}

std::vector<ScanRow> scan(const std::vector<double>& phis, Geometry g, bool bell) {
  auto rows = bell ? bell_scan(phis, g) : fidelity_scan(phis, g);
  for (const auto& r : rows) pooled.merge(r.physicality);
  return rows;
}

Outcome fidelity_landmarks() {
  const auto sym = scan({0.63, 0.05}, Geometry::Symmetric, false);
  const auto anti = scan({0.63, 0.05}, Geometry::Antisymmetric, false);
  for (const auto* rows : {&sym, &anti})
    for (const auto& r : *rows)
      if (r.status != RowStatus::Ok) return {false, "pulse failed: " + r.error};
  const double better = std::max(sym[0].fidelity, anti[0].fidelity);
  const bool pass = better >= 0.7 && better <= 0.9 && sym[1].fidelity > 0.9 && anti[1].fidelity > 0.9;
  return {pass, fmt("phi=0.63 best %.4f (sym %.4f, anti %.4f); phi=0.05 sym %.4f", better, sym[0].fidelity,
                    anti[0].fidelity, sym[1].fidelity) +
                    fmt(", anti %.4f", anti[1].fidelity)};
}

// First phi where the functional rises through 1, linearly interpolated.
double crossing(const std::vector<ScanRow>& rows) {
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double a = rows[i - 1].bell->lhs - 1.0;
    const double b = rows[i].bell->lhs - 1.0;
    if (a < 0.0 && b >= 0.0) return rows[i - 1].phi + (rows[i].phi - rows[i - 1].phi) * (-a) / (b - a);
  }
  return std::nan("");
}

Outcome bell_crossing() {
  std::vector<double> phis;
  for (int i = 1; i <= 20; ++i) phis.push_back(0.05 * i);
  const auto anti = scan(phis, Geometry::Antisymmetric, true);
  const auto sym = scan(phis, Geometry::Symmetric, true);
  for (const auto* rows : {&sym, &anti})
    for (const auto& r : *rows)
      if (r.status != RowStatus::Ok) return {false, "pulse failed: " + r.error};
  const double cross = crossing(anti);
  const double near_anti = anti[0].bell->lhs;
  const double near_sym = sym[0].bell->lhs;
  const bool pass = std::abs(cross - 0.5) <= 0.15 && std::abs(near_anti - 0.75) <= 0.05 &&
                    std::abs(near_sym - 0.75) <= 0.05;
  return {pass, fmt("anti crossing at phi = %.3f (sym %.3f); phi=0.05 lhs anti %.4f, sym %.4f", cross,
                    crossing(sym), near_anti, near_sym)};
}

Outcome physicality() {
  const bool pass = pooled.max_trace_deviation < 1e-9 && pooled.max_hermiticity_deviation < 1e-9 &&
                    pooled.min_eigenvalue >= -1e-8 && pooled.states_checked > 0;
  return {pass, fmt("%.0f states: trace dev %.2e, hermiticity dev %.2e, min eigenvalue %.2e",
                    static_cast<double>(pooled.states_checked), pooled.max_trace_deviation,
                    pooled.max_hermiticity_deviation, pooled.min_eigenvalue)};
}

Outcome determinism() {
  const std::vector<std::string> commands = {
      "steady --phi 0.5 --omega-points 21 --delta-points 31",
      "pulse --geometry anti --phi-grid 0.2:1.0:0.2",
      "bell --geometry sym --phi-grid 0.3,0.6,0.9",
      "trace --phi 0.5 --geometry anti --duration 5 --samples 100",
  };
  int runs = 0;
  for (const auto& c : commands) {
    const auto reference = clitest::run_cli(c + " --jobs 1");
    if (reference.code != 0 || reference.out.empty()) return {false, "failed: " + c};
    for (int jobs : {1, 2, 4, 0}) {
      const auto r = clitest::run_cli(c + " --jobs " + std::to_string(jobs));
      ++runs;
      if (r.code != reference.code || r.out != reference.out) return {false, "differs: " + c};
    }
  }
  return {true, fmt("%.0f CLI runs byte-identical across --jobs 1, 2, 4, default", runs)};
}

struct Criterion {
  int id;
  const char* name;
  double budget_s;  // <= 0: no runtime bound
  std::function<Outcome()> check;
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "steady-state closed form vs null space", 10.0, steady_equivalence},
      {2, "collective decay rates", 5.0, decay_rates},
      {3, "pure and mixed Bell values", 0.0, bell_reference},
      {4, "optimal-pulse fidelity landmarks", 30.0, fidelity_landmarks},
      {5, "Bell violation crossing", 60.0, bell_crossing},
      {6, "physicality along trajectories", 0.0, physicality},
      {7, "CLI determinism", 0.0, determinism},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.budget_s > 0.0 && seconds > c.budget_s) {
      o.pass = false;
      o.detail += fmt(" [over budget %.0f s]", c.budget_s);
    }
    if (!o.pass) ++failed;
    std::printf("[%s] criterion %d: %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", c.id, c.name,
                o.detail.c_str(), seconds);
    std::fflush(stdout);
  }
  std::printf("%d/7 criteria passed\n", 7 - failed);
  return failed == 0 ? 0 : 1;
}
