#include "rddi/pulse.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <sstream>

#include "rddi/hamiltonian.hpp"

namespace rddi {

double target_rabi_frequency(const OptimalDrive& od, const CouplingParams& coupling) {
  const Matrix4 h = build_hamiltonian(od.drive, coupling);
  const Vector4 target = dicke_vector(od.target);
  const Vector4 ground = dicke_vector(DickeState::Ground);
  return 2.0 * std::abs(target.dot(h * ground));
}

double target_detuning(const OptimalDrive& od, const CouplingParams& coupling) {
  const Matrix4 h = build_hamiltonian(od.drive, coupling);
  const Vector4 target = dicke_vector(od.target);
  const Vector4 ground = dicke_vector(DickeState::Ground);
  return (target.dot(h * target) - ground.dot(h * ground)).real();
}

namespace {

// Dicke occupation read from hermitian_coordinates: x1 = rho_eg,eg,
// x2 = rho_ge,ge, x10 = Re rho_eg,ge.
double population(const RealVector16& x, DickeState state) {
  switch (state) {
    case DickeState::Excited:
      return x(0);
    case DickeState::Symmetric:
      return 0.5 * (x(1) + x(2)) + x(10);
    case DickeState::Antisymmetric:
      return 0.5 * (x(1) + x(2)) - x(10);
    case DickeState::Ground:
      return x(3);
  }
  return 0.0;
}

PopulationVector populations(const RealVector16& x) {
  return {population(x, DickeState::Excited), population(x, DickeState::Symmetric),
          population(x, DickeState::Antisymmetric), population(x, DickeState::Ground)};
}

// Sampled population stream with bounded memory: when full, every other point
// is dropped and the keep-stride doubles.
class DecimatedTrace {
public:
  explicit DecimatedTrace(std::size_t capacity) : capacity_(std::max<std::size_t>(capacity, 4)) {}

  void push(long index, double t, const RealVector16& state) {
    if (index % stride_ != 0) return;
    times.push_back(t);
    pops.push_back(populations(state));
    if (times.size() >= capacity_) {
      std::size_t w = 0;
      for (std::size_t r = 0; r < times.size(); r += 2, ++w) {
        times[w] = times[r];
        pops[w] = pops[r];
      }
      times.resize(w);
      pops.resize(w);
      stride_ *= 2;
    }
  }

  // Drops samples past the refined maximum and appends it.
  void finish(double t, const PopulationVector& p) {
    while (!times.empty() && times.back() >= t) {
      times.pop_back();
      pops.pop_back();
    }
    times.push_back(t);
    pops.push_back(p);
  }

  std::vector<double> times;
  std::vector<PopulationVector> pops;

private:
  std::size_t capacity_;
  long stride_ = 1;
};

// Hermiticity is exact in hermitian_coordinates; trace and positivity are
// checked on every sample, the exact spectrum every `stride` samples.
class StateChecker {
public:
  StateChecker(const Tolerances& tol, int stride) : tol_(tol), stride_(std::max(1, stride)) {}

  void check(const RealVector16& x, double t, long index, PhysicalityLog& log) const {
    const double trace_dev = std::abs(x(0) + x(1) + x(2) + x(3) - 1.0);
    const Matrix4 rho = from_hermitian_coordinates(x);
    double min_eig = std::numeric_limits<double>::infinity();
    bool positive = true;
    if (index % stride_ == 0) {
      min_eig = measure_physicality(rho).min_eigenvalue;
      positive = min_eig >= tol_.min_eigenvalue;
    } else if (!positive_within(rho, -tol_.min_eigenvalue)) {
      min_eig = measure_physicality(rho).min_eigenvalue;
      positive = false;
    }
    log.max_trace_deviation = std::max(log.max_trace_deviation, trace_dev);
    log.min_eigenvalue = std::min(log.min_eigenvalue, min_eig);
    ++log.states_checked;

    if (trace_dev > tol_.trace || !positive) {
      std::ostringstream os;
      os << "state left the physical set at t = " << t << ": |tr-1| = " << trace_dev
         << ", min eigenvalue = " << min_eig;
      throw IntegratorError(os.str(), t);
    }
  }

private:
  Tolerances tol_;
  int stride_;
};

struct Sample {
  double t = 0.0;
  double value = 0.0;
  RealVector16 state;
};

// Vertex of the parabola through three points, or b when they are collinear.
double parabola_vertex(const Sample& a, const Sample& b, const Sample& c) {
  const double ba = b.t - a.t;
  const double bc = b.t - c.t;
  const double fb_fc = b.value - c.value;
  const double fb_fa = b.value - a.value;
  const double den = ba * fb_fc - bc * fb_fa;
  if (den == 0.0) return b.t;
  return b.t - 0.5 * (ba * ba * fb_fc - bc * bc * fb_fa) / den;
}

}  // namespace

PulseResult optimal_pulse(const CouplingParams& coupling, Geometry geometry,
                          const PulseSettings& settings) {
  PulseResult result;
  result.drive = optimal_drive(coupling, geometry);
  const DriveParams& drive = result.drive.drive;
  const DickeState target = result.drive.target;

  HermitianEvolver evolver(build_liouvillian(drive, coupling), settings.integrator);

  double dt = std::numeric_limits<double>::infinity();
  if (drive.omega > 0.0) dt = std::min(dt, 0.01 / drive.omega);
  if (drive.delta != 0.0) dt = std::min(dt, 0.01 / std::abs(drive.delta));
  if (!std::isfinite(dt)) dt = 0.01;
  result.sample_interval = dt;

  const double generalized =
      std::hypot(target_rabi_frequency(result.drive, coupling), target_detuning(result.drive, coupling));
  if (!(generalized > 0.0)) {
    throw PulseSearchError("target transition is not driven", 0.0);
  }
  result.horizon = settings.horizon_periods * 2.0 * std::numbers::pi / generalized;

  const StateChecker checker(settings.integrator.tolerances, settings.eigen_check_stride);
  DecimatedTrace trace(settings.max_trajectory_points);

  auto sample_at = [&](const RealVector16& x, double t, long index) {
    Sample s{t, population(x, target), x};
    checker.check(s.state, t, index, result.physicality);
    return s;
  };

  Sample prev = sample_at(hermitian_coordinates(DensityMatrix().matrix()), 0.0, 0);
  trace.push(0, 0.0, prev.state);
  Sample cur = sample_at(evolver.advance(prev.state, dt), dt, 1);
  trace.push(1, cur.t, cur.state);

  long index = 1;
  std::optional<std::array<Sample, 3>> bracket;
  while (!bracket) {
    if (cur.t > result.horizon) {
      std::ostringstream os;
      os << "no maximum of the target population within the horizon " << result.horizon
         << "/gamma";
      throw PulseSearchError(os.str(), result.horizon);
    }
    ++index;
    Sample next = sample_at(evolver.advance(cur.state, dt), static_cast<double>(index) * dt, index);
    trace.push(index, next.t, next.state);
    if (prev.value < cur.value && cur.value >= next.value) {
      bracket = std::array<Sample, 3>{prev, cur, next};
    } else {
      prev = cur;
      cur = next;
    }
  }

  // Iterated three-point parabolic refinement inside [a, c]; b is the best point.
  auto [a, b, c] = *bracket;
  double estimate = b.t;
  for (int iter = 0; iter < 60; ++iter) {
    const double x = parabola_vertex(a, b, c);
    if (!(x > a.t && x < c.t) || x == b.t) break;
    Sample probe = sample_at(evolver.advance(a.state, x - a.t), x, 0);
    if (x > b.t) {
      if (probe.value >= b.value) {
        a = b;
        b = probe;
      } else {
        c = probe;
      }
    } else {
      if (probe.value >= b.value) {
        c = b;
        b = probe;
      } else {
        a = probe;
      }
    }
    const bool converged = std::abs(x - estimate) <= settings.relative_time_accuracy * std::abs(x);
    estimate = x;
    if (converged) break;
  }

  result.duration = b.t;
  result.fidelity = b.value;
  result.final_state = DensityMatrix(from_hermitian_coordinates(b.state), settings.integrator.tolerances);
  trace.finish(b.t, populations(b.state));
  result.times = std::move(trace.times);
  result.trajectory = std::move(trace.pops);
  return result;
}

}  // namespace rddi
