#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace rddi {

using Complex = std::complex<double>;

// Two-atom operators in the product basis (|ee>, |eg>, |ge>, |gg>), |eg> = |e>_1 |g>_2.
using Matrix4 = Eigen::Matrix<Complex, 4, 4>;
using Vector4 = Eigen::Matrix<Complex, 4, 1>;

// Superoperators act on column-stacked 4x4 matrices.
using Matrix16 = Eigen::Matrix<Complex, 16, 16>;
using Vector16 = Eigen::Matrix<Complex, 16, 1>;

enum class Geometry { Symmetric, Antisymmetric };

const char* to_string(Geometry geometry);

/// Raised when a state leaves the physical set (trace, Hermiticity, positivity).
class InvariantError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Raised when a linear solve has no well-defined unique answer.
class SolverError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Raised by the time integrator; carries the time at which it gave up.
class IntegratorError : public std::runtime_error {
public:
  IntegratorError(const std::string& what, double time)
      : std::runtime_error(what), time_(time) {}
  double time() const { return time_; }

private:
  double time_;
};

}  // namespace rddi
