#include "rddi/evolve.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace rddi {

double integration_step(const Liouvillian& liouvillian, const IntegratorSettings& settings) {
  const double h = std::min(settings.step_cap, 0.01 / liouvillian.max_rate);
  if (!(h >= settings.min_step)) {
    std::ostringstream os;
    os << "integration step " << h << " underflows the minimum " << settings.min_step
       << " (step_cap " << settings.step_cap << ", max rate " << liouvillian.max_rate << ")";
    throw IntegratorError(os.str(), 0.0);
  }
  return h;
}

Vector16 rk4_reference_step(const Matrix16& generator, const Vector16& v, double step) {
  const Vector16 k1 = generator * v;
  const Vector16 k2 = generator * (v + 0.5 * step * k1);
  const Vector16 k3 = generator * (v + 0.5 * step * k2);
  const Vector16 k4 = generator * (v + step * k3);
  return v + (step / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

Rk4Propagator::Rk4Propagator(const Matrix16& generator, double step) : step_(step) {
  const Matrix16 hl = step * generator;
  // Horner form of sum_{k<=4} (hL)^k / k!
  Matrix16 m = Matrix16::Identity() + hl / 4.0;
  m = Matrix16::Identity() + (hl * m) / 3.0;
  m = Matrix16::Identity() + (hl * m) / 2.0;
  step_matrix_ = Matrix16::Identity() + hl * m;
}

void Rk4Propagator::advance(Vector16& v, long steps) const {
  Vector16 next;
  for (long i = 0; i < steps; ++i) {
    next.noalias() = step_matrix_ * v;
    v = next;
  }
}

Matrix16 rk4_interval_matrix(const Matrix16& generator, double step, double interval) {
  long steps = std::max(1L, static_cast<long>(std::ceil(interval / step * (1.0 - 1e-12))));
  const Rk4Propagator one(generator, interval / static_cast<double>(steps));
  // M^steps by repeated squaring
  Matrix16 power = one.step_matrix();
  Matrix16 acc = Matrix16::Identity();
  while (steps > 0) {
    if (steps & 1L) acc = acc * power;
    steps >>= 1;
    if (steps > 0) power = power * power;
  }
  return acc;
}

Evolver::Evolver(const Liouvillian& liouvillian, const IntegratorSettings& settings)
    : generator_(liouvillian.matrix()), step_(integration_step(liouvillian, settings)) {}

Vector16 Evolver::advance(const Vector16& v, double interval) {
  if (interval <= 0.0) return v;
  if (interval != cached_interval_) {
    cached_interval_matrix_ = rk4_interval_matrix(generator_, step_, interval);
    cached_interval_ = interval;
  }
  return cached_interval_matrix_ * v;
}

namespace {

constexpr int kPairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};

}  // namespace

RealVector16 hermitian_coordinates(const Matrix4& rho) {
  RealVector16 x;
  for (int i = 0; i < 4; ++i) x(i) = rho(i, i).real();
  for (int k = 0; k < 6; ++k) {
    const Complex z = rho(kPairs[k][0], kPairs[k][1]);
    x(4 + 2 * k) = z.real();
    x(5 + 2 * k) = z.imag();
  }
  return x;
}

Matrix4 from_hermitian_coordinates(const RealVector16& x) {
  Matrix4 rho;
  for (int i = 0; i < 4; ++i) rho(i, i) = x(i);
  for (int k = 0; k < 6; ++k) {
    const Complex z(x(4 + 2 * k), x(5 + 2 * k));
    rho(kPairs[k][0], kPairs[k][1]) = z;
    rho(kPairs[k][1], kPairs[k][0]) = std::conj(z);
  }
  return rho;
}

RealMatrix16 real_superoperator(const Matrix16& superoperator) {
  RealMatrix16 r;
  for (int c = 0; c < 16; ++c) {
    RealVector16 basis = RealVector16::Zero();
    basis(c) = 1.0;
    const Vector16 image = superoperator * vectorize(from_hermitian_coordinates(basis));
    r.col(c) = hermitian_coordinates(unvectorize(image));
  }
  return r;
}

HermitianEvolver::HermitianEvolver(const Liouvillian& liouvillian,
                                   const IntegratorSettings& settings)
    : generator_(liouvillian.matrix()), step_(integration_step(liouvillian, settings)) {}

RealVector16 HermitianEvolver::advance(const RealVector16& x, double interval) {
  if (interval <= 0.0) return x;
  if (interval != cached_interval_) {
    cached_interval_matrix_ = real_superoperator(rk4_interval_matrix(generator_, step_, interval));
    cached_interval_ = interval;
  }
  return cached_interval_matrix_ * x;
}

void PhysicalityLog::record(const Physicality& p) {
  max_trace_deviation = std::max(max_trace_deviation, p.trace_deviation);
  max_hermiticity_deviation = std::max(max_hermiticity_deviation, p.hermiticity_deviation);
  min_eigenvalue = std::min(min_eigenvalue, p.min_eigenvalue);
  ++states_checked;
}

void PhysicalityLog::merge(const PhysicalityLog& other) {
  max_trace_deviation = std::max(max_trace_deviation, other.max_trace_deviation);
  max_hermiticity_deviation = std::max(max_hermiticity_deviation, other.max_hermiticity_deviation);
  min_eigenvalue = std::min(min_eigenvalue, other.min_eigenvalue);
  states_checked += other.states_checked;
}

namespace {

std::vector<double> uniform_times(double duration, int samples) {
  const int n = std::max(1, samples);
  const double spacing = duration / n;
  std::vector<double> times(n + 1);
  for (int k = 0; k <= n; ++k) times[k] = k * spacing;
  times[n] = duration;
  return times;
}

}  // namespace

Trajectory evolve(const DensityMatrix& rho0, const Liouvillian& liouvillian, double duration,
                  const EvolveControl& control) {
  if (!(duration > 0.0)) {
    throw std::invalid_argument("evolve requires a positive duration");
  }
  std::vector<double> times;
  if (control.sample_times.empty()) {
    times = uniform_times(duration, control.samples);
  } else {
    times.push_back(0.0);
    for (double t : control.sample_times) {
      if (!(t > times.back()) || t > duration) {
        throw std::invalid_argument("sample times must increase within (0, duration]");
      }
      times.push_back(t);
    }
  }

  Evolver evolver(liouvillian, control.integrator);
  const double uniform_gap = control.sample_times.empty() ? times[1] - times[0] : 0.0;

  Trajectory out;
  out.times.reserve(times.size());
  out.states.reserve(times.size());
  Vector16 v = rho0.vectorized();
  const Tolerances& tol = control.integrator.tolerances;
  for (std::size_t k = 0; k < times.size(); ++k) {
    if (k > 0) {
      // uniform samples reuse one propagator; the final gap absorbs rounding
      double gap = times[k] - times[k - 1];
      if (uniform_gap > 0.0 && std::abs(gap - uniform_gap) <= 1e-12 * duration) gap = uniform_gap;
      v = evolver.advance(v, gap);
    }
    const Matrix4 rho = unvectorize(v);
    const Physicality p = measure_physicality(rho);
    out.physicality.record(p);
    try {
      out.states.emplace_back(rho, tol);
    } catch (const InvariantError& e) {
      std::ostringstream os;
      os << "state left the physical set at t = " << times[k] << ": " << e.what();
      throw IntegratorError(os.str(), times[k]);
    }
    out.times.push_back(times[k]);
  }
  return out;
}

}  // namespace rddi
