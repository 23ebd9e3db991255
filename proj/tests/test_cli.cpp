#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli_helpers.hpp"
#include "oracles.hpp"
#include "rddi/cli/commands.hpp"
#include "rddi/cli/config.hpp"
#include "rddi/pulse.hpp"

using namespace rddi;
using namespace rddi::cli;
using clitest::column;
using clitest::rows;
using clitest::run_cli;
using doctest::Approx;

namespace {

RunConfig parse(std::vector<const char*> args) {
  args.insert(args.begin(), "rddi");
  std::string help;
  auto c = parse_command_line(static_cast<int>(args.size()), args.data(), help);
  REQUIRE(c.has_value());
  return *c;
}

}  // namespace

TEST_CASE("phi grid syntax") {
  CHECK(parse_phi_grid("0.1,0.25,2") == std::vector<double>{0.1, 0.25, 2.0});
  const auto range = parse_phi_grid("0.1:0.3:0.1");
  REQUIRE(range.size() == 3);
  CHECK(range[2] == Approx(0.3));
  CHECK_THROWS_AS(parse_phi_grid("0.1,abc"), ConfigError);
  CHECK_THROWS_AS(parse_phi_grid("1:0:0.1"), ConfigError);
  CHECK_THROWS_AS(parse_phi_grid(""), ConfigError);
  const auto d = default_phi_grid();
  REQUIRE(d.size() == 20);
  CHECK(d.front() == Approx(0.05));
  CHECK(d.back() == Approx(1.0));
}

TEST_CASE("parsing fills the run configuration") {
  const auto c = parse({"pulse", "--geometry", "anti", "--phi-grid", "0.2,0.4", "--transition", "dm0", "--jobs", "2"});
  CHECK(c.command == Command::Pulse);
  CHECK(c.geometry == Geometry::Antisymmetric);
  CHECK(c.transition == TransitionType::DeltaM0);
  CHECK(c.phi_grid == std::vector<double>{0.2, 0.4});
  CHECK(c.jobs == 2);

  const auto s = parse({"steady", "--omega-min", "1", "--omega-max", "2", "--omega-points", "5"});
  CHECK(s.geometry == Geometry::Symmetric);
  CHECK(s.omega_grid.values().size() == 5);
  CHECK(s.omega_grid.values().back() == 2.0);

  const auto t = parse({"trace", "--omega", "1", "--delta", "-2", "--start", "e"});
  CHECK(t.omega == 1.0);
  CHECK(t.delta == -2.0);
  CHECK(t.start == DickeState::Excited);
}

TEST_CASE("invalid configurations exit with code 2") {
  for (const char* args : {"", "pulse", "pulse --geometry anti --omega 1", "trace --omega 1",
                           "steady --phi 0", "steady --phi 25", "steady --bogus 1", "bell --geometry up",
                           "steady --omega-min 3 --omega-max 1", "pulse --geometry sym --phi-grid 0.1,x",
                           "trace --duration -1", "steady --jobs -1"}) {
    CAPTURE(args);
    const auto r = run_cli(args);
    CHECK(r.code == kConfigError);
    CHECK(r.out.empty());
  }
}

TEST_CASE("help and version succeed") {
  const auto h = run_cli("--help");
  CHECK(h.code == 0);
  CHECK(h.out.find("steady") != std::string::npos);
  const auto v = run_cli("--version");
  CHECK(v.code == 0);
  CHECK(v.out.find(kVersion) != std::string::npos);
}

TEST_CASE("config file values apply and flags override them") {
  const std::string path = "rddi_test_config.ini";
  {
    std::ofstream f(path);
    f << "phi=0.7\ntransition=dm0\nomega-points=4\n";
  }
  const auto c = parse({"steady", "--config", path.c_str(), "--phi", "0.9"});
  CHECK(c.phi == 0.9);
  CHECK(c.transition == TransitionType::DeltaM0);
  CHECK(c.omega_grid.points == 4);
  std::remove(path.c_str());
}

TEST_CASE("steady: provenance, methods agree, undriven row is ground") {
  const auto r = run_cli("steady --phi 0.5 --omega-points 6 --delta-points 9");
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("# rddi ", 0) == 0);
  CHECK(r.out.find("# phi = 0.5") != std::string::npos);
  const auto t = rows(r.out);
  REQUIRE(t.size() == 1 + 2 * 6 * 9);
  CHECK(t[0] == std::vector<std::string>{"omega", "delta", "N_e", "N_s", "N_a", "N_g", "method"});
  for (std::size_t i = 1; i < t.size(); i += 2) {
    CHECK(t[i][6] == "analytic");
    CHECK(t[i + 1][6] == "numeric");
    CHECK(t[i][0] == t[i + 1][0]);
    for (int c = 2; c < 6; ++c) CHECK(std::abs(std::stod(t[i][c]) - std::stod(t[i + 1][c])) < 1e-8);
    if (std::stod(t[i][0]) == 0.0) CHECK(std::stod(t[i + 1][5]) == Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("steady: weak-drive N_s peaks at the shifted resonance") {
  const auto k = CouplingParams::at(0.5);
  const auto r = run_cli("steady --phi 0.5 --omega-min 0.5 --omega-max 0.5 --omega-points 1 "
                         "--delta-min -10 --delta-max 10 --delta-points 401");
  REQUIRE(r.code == 0);
  const auto t = rows(r.out);
  double best = -1.0;
  double at = 0.0;
  for (std::size_t i = 2; i < t.size(); i += 2) {
    const double ns = std::stod(t[i][3]);
    if (ns > best) {
      best = ns;
      at = std::stod(t[i][1]);
    }
  }
  CHECK(std::abs(at - k.chi / 2.0) <= 0.05);
}

TEST_CASE("steady: degenerate cells exit with code 3") {
  const auto r = run_cli("steady --phi 0.001 --omega-min 0 --omega-max 1 --omega-points 2 --delta-points 3");
  CHECK(r.code == kSolverDegenerate);
  CHECK(r.out.find("nan") != std::string::npos);
}

TEST_CASE("output is byte-identical across runs and job counts") {
  const std::string steady = "steady --phi 0.3 --omega-points 7 --delta-points 11";
  const std::string pulse = "pulse --geometry anti --phi-grid 0.3,0.5,1.0";
  const std::string bell = "bell --geometry sym --phi-grid 0.4,0.9";
  for (const auto& base : {steady, pulse, bell}) {
    CAPTURE(base);
    const auto a = run_cli(base + " --jobs 1");
    const auto b = run_cli(base + " --jobs 3");
    const auto c = run_cli(base + " --jobs 3");
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(b.out == c.out);
    CHECK(a.out.find("jobs") == std::string::npos);
  }
}

TEST_CASE("--out writes the same document") {
  const std::string path = "rddi_test_out.csv";
  const auto direct = run_cli("pulse --geometry sym --phi-grid 0.5");
  const auto to_file = run_cli("pulse --geometry sym --phi-grid 0.5 --out " + path);
  CHECK(to_file.code == 0);
  CHECK(to_file.out.empty());
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  CHECK(ss.str() == direct.out);
  std::remove(path.c_str());
}

TEST_CASE("pulse columns") {
  const auto r = run_cli("pulse --geometry anti --phi-grid 0.5");
  REQUIRE(r.code == 0);
  const auto t = rows(r.out);
  REQUIRE(t.size() == 2);
  CHECK(t[0] == std::vector<std::string>{"phi", "geometry", "delta_opt", "omega_opt", "duration", "fidelity", "error"});
  CHECK(t[1][1] == "anti");
  CHECK(std::stod(t[1][4]) == Approx(12.267642968206848).epsilon(1e-4));
  CHECK(std::stod(t[1][5]) == Approx(0.7902186148093993).epsilon(1e-7));
  CHECK(t[1][6].empty());
}

TEST_CASE("bell: violated flag follows the functional") {
  const auto r = run_cli("bell --geometry anti --phi-grid 0.3,1.0");
  REQUIRE(r.code == 0);
  const auto t = rows(r.out);
  const auto lhs = column(t[0], "bell_lhs");
  const auto flag = column(t[0], "violated");
  REQUIRE(t.size() == 3);
  for (std::size_t i = 1; i < t.size(); ++i) CHECK((t[i][flag] == "true") == (std::stod(t[i][lhs]) < 1.0));
  CHECK(t[1][flag] == "true");
  CHECK(t[2][flag] == "false");
}

TEST_CASE("trace: free decay of psi_s at rate 1 + g") {
  const auto k = CouplingParams::at(1.0);
  const auto r = run_cli("trace --phi 1 --omega 0 --delta 0 --start s --duration 2 --samples 40");
  REQUIRE(r.code == 0);
  const auto t = rows(r.out);
  CHECK(t[0] == std::vector<std::string>{"t", "N_e", "N_s", "N_a", "N_g", "trace", "min_eigenvalue"});
  std::vector<double> times, ns;
  for (std::size_t i = 1; i < t.size(); ++i) {
    times.push_back(std::stod(t[i][0]));
    ns.push_back(std::stod(t[i][2]));
    CHECK(std::abs(std::stod(t[i][5]) - 1.0) < 1e-9);
    CHECK(std::stod(t[i][6]) > -1e-8);
  }
  CHECK(times.size() == 41);
  CHECK(oracle::fitted_decay_rate(times, ns) == Approx(k.gamma_plus()).epsilon(1e-6));
}

TEST_CASE("trace under the optimal drive peaks where pulse stops") {
  const auto r = run_cli("trace --phi 0.5 --geometry anti --duration 14 --samples 1400");
  REQUIRE(r.code == 0);
  const auto t = rows(r.out);
  double best = -1.0;
  for (std::size_t i = 1; i < t.size(); ++i) {
    const double na = std::stod(t[i][3]);
    if (std::stod(t[i][0]) > 13.0) break;
    best = std::max(best, na);
  }
  const auto p = optimal_pulse(CouplingParams::at(0.5), Geometry::Antisymmetric);
  CHECK(std::abs(best - p.fidelity) < 1e-3);
}

TEST_CASE("main_entry with in-memory streams") {
  std::ostringstream out, log;
  const char* argv[] = {"rddi", "pulse", "--geometry", "sym", "--phi-grid", "0.5"};
  CHECK(main_entry(6, argv, out, log) == 0);
  CHECK(out.str() == run_cli("pulse --geometry sym --phi-grid 0.5").out);
}
