#pragma once

#include <vector>

#include "rddi/density_matrix.hpp"
#include "rddi/liouvillian.hpp"

namespace rddi {

struct IntegratorSettings {
  /// User bound on the RK4 step (units of 1/gamma).
  double step_cap = 1e-2;
  /// Steps below this are reported as underflow.
  double min_step = 1e-12;
  /// Bounds enforced on every returned state.
  Tolerances tolerances{1e-9, 1e-9, -1e-8};
};

/// h = min(step_cap, 0.01 / max_rate). Throws IntegratorError on underflow.
double integration_step(const Liouvillian& liouvillian, const IntegratorSettings& settings);

/// One classic RK4 step, evaluated stage by stage. Reference for Rk4Propagator.
Vector16 rk4_reference_step(const Matrix16& generator, const Vector16& v, double step);

/// RK4 for the autonomous linear system dv/dt = L v. One step is the fixed matrix
/// I + hL + (hL)^2/2 + (hL)^3/6 + (hL)^4/24, so it is assembled once and reused.
class Rk4Propagator {
public:
  Rk4Propagator(const Matrix16& generator, double step);

  double step() const { return step_; }
  const Matrix16& step_matrix() const { return step_matrix_; }

  void advance(Vector16& v, long steps) const;

private:
  double step_;
  Matrix16 step_matrix_;
};

/// Product of ceil(interval / step) equal RK4 steps covering exactly `interval`.
Matrix16 rk4_interval_matrix(const Matrix16& generator, double step, double interval);

/// Advances states over arbitrary intervals with n = ceil(interval / h) equal RK4
/// steps, landing exactly on the interval end. The n-step product for the last
/// interval length is cached, so repeated equal intervals cost one
/// matrix-vector product each.
class Evolver {
public:
  Evolver(const Liouvillian& liouvillian, const IntegratorSettings& settings);

  double step() const { return step_; }
  const Matrix16& generator() const { return generator_; }

  Vector16 advance(const Vector16& v, double interval);

private:
  Matrix16 generator_;
  double step_;
  double cached_interval_ = -1.0;
  Matrix16 cached_interval_matrix_;
};

// Real coordinates of a Hermitian 4x4 matrix: the four diagonal entries, then
// (Re, Im) of rho_ij for i < j in the order 01, 02, 03, 12, 13, 23.
using RealVector16 = Eigen::Matrix<double, 16, 1>;
using RealMatrix16 = Eigen::Matrix<double, 16, 16>;

RealVector16 hermitian_coordinates(const Matrix4& rho);
Matrix4 from_hermitian_coordinates(const RealVector16& x);

/// Real 16x16 form of a Hermiticity-preserving superoperator in hermitian_coordinates.
RealMatrix16 real_superoperator(const Matrix16& superoperator);

/// Evolver on hermitian_coordinates: one real 16x16 product per cached interval,
/// a quarter of the arithmetic of the complex form. States stay exactly Hermitian.
class HermitianEvolver {
public:
  HermitianEvolver(const Liouvillian& liouvillian, const IntegratorSettings& settings);

  double step() const { return step_; }

  RealVector16 advance(const RealVector16& x, double interval);

private:
  Matrix16 generator_;
  double step_;
  double cached_interval_ = -1.0;
  RealMatrix16 cached_interval_matrix_;
};

/// Worst-case physicality seen along a run.
struct PhysicalityLog {
  double max_trace_deviation = 0.0;
  double max_hermiticity_deviation = 0.0;
  double min_eigenvalue = 1.0;
  long states_checked = 0;

  void record(const Physicality& p);
  void merge(const PhysicalityLog& other);
};

struct EvolveControl {
  IntegratorSettings integrator;
  /// Uniform samples over [0, duration] (samples + 1 points), used when
  /// sample_times is empty.
  int samples = 100;
  /// Explicit, increasing sample times in (0, duration].
  std::vector<double> sample_times;
};

struct Trajectory {
  std::vector<double> times;
  std::vector<DensityMatrix> states;
  PhysicalityLog physicality;
};

/// Time-dependent solution from rho0. Each returned state is checked against the
/// integrator tolerances; a breach throws IntegratorError carrying the time.
Trajectory evolve(const DensityMatrix& rho0, const Liouvillian& liouvillian, double duration,
                  const EvolveControl& control = {});

}  // namespace rddi
