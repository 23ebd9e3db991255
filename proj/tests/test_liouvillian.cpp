#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "rddi/dicke.hpp"
#include "rddi/liouvillian.hpp"

using namespace rddi;
using doctest::Approx;

namespace {

struct RandomCase {
  DriveParams drive;
  CouplingParams coupling;
};

RandomCase random_case(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> omega(0.0, 5.0);
  std::uniform_real_distribution<double> delta(-10.0, 10.0);
  std::uniform_real_distribution<double> log_phi(std::log(0.05), std::log(5.0));
  std::bernoulli_distribution coin(0.5);
  RandomCase c;
  c.drive = {omega(rng), delta(rng), coin(rng) ? Geometry::Symmetric : Geometry::Antisymmetric};
  c.coupling = CouplingParams::at(std::exp(log_phi(rng)),
                                  coin(rng) ? TransitionType::DeltaM0 : TransitionType::DeltaMpm1);
  return c;
}

}  // namespace

TEST_CASE("superoperator equals the master equation written with 4x4 products") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const auto c = random_case(rng);
    const Matrix16 l = build_liouvillian(c.drive, c.coupling).matrix();
    const Matrix4 rho = oracle::random_state(rng);
    const Matrix4 direct =
        oracle::master_equation_rhs(rho, build_hamiltonian(c.drive, c.coupling), c.coupling.g);
    const Matrix4 via_l = unvectorize(l * vectorize(rho));
    const double scale = std::max(1.0, l.cwiseAbs().maxCoeff());
    REQUIRE((via_l - direct).cwiseAbs().maxCoeff() < 1e-13 * scale);
  }
}

TEST_CASE("trace row is a left null vector") {
  std::mt19937_64 rng(5);
  const Eigen::Matrix<Complex, 1, 16> trace_row = vectorize(Matrix4::Identity()).transpose();
  for (int trial = 0; trial < 100; ++trial) {
    const auto c = random_case(rng);
    const Matrix16 l = build_liouvillian(c.drive, c.coupling).matrix();
    REQUIRE((trace_row * l).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("max rate covers every frequency in the generator") {
  const auto k = CouplingParams::at(0.2);
  const auto l = build_liouvillian({3.0, -1.0, Geometry::Symmetric}, k);
  CHECK(l.max_rate == Approx(std::abs(k.chi)));
  const auto far = build_liouvillian({0.1, 0.0, Geometry::Symmetric}, CouplingParams::at(30.0));
  CHECK(far.max_rate == 1.0);
}

TEST_CASE("non-physical collective decay is rejected") {
  CHECK_THROWS_AS(collective_dissipator(1.0001), std::domain_error);
  CHECK_NOTHROW(collective_dissipator(1.0));
  CHECK_NOTHROW(collective_dissipator(-1.0));
}

TEST_CASE("undriven Dicke populations decay at (1 +- g) gamma") {
  for (double phi : {0.3, 0.5, 1.0}) {
    const auto k = CouplingParams::at(phi);
    const Matrix16 l = build_liouvillian({0.0, 0.0, Geometry::Symmetric}, k).matrix();
    for (double t : {0.5, 1.0, 3.0}) {
      const Matrix16 u = oracle::propagator(l, t);
      const Vector16 s = u * DensityMatrix::pure(dicke_vector(DickeState::Symmetric)).vectorized();
      const Vector16 a = u * DensityMatrix::pure(dicke_vector(DickeState::Antisymmetric)).vectorized();
      CHECK(dicke_population(s, DickeState::Symmetric) ==
            Approx(std::exp(-(1.0 + k.g) * t)).epsilon(1e-12));
      CHECK(dicke_population(a, DickeState::Antisymmetric) ==
            Approx(std::exp(-(1.0 - k.g) * t)).epsilon(1e-12));
    }
  }
}

TEST_CASE("uncoupled atoms: |ee> decays as exp(-2 gamma t)") {
  CouplingParams k = CouplingParams::at(1.0);
  k.g = 0.0;
  const Matrix16 l = build_liouvillian({0.0, 0.0, Geometry::Symmetric}, k).matrix();
  const Vector16 e = oracle::propagator(l, 1.3) * DensityMatrix::pure(dicke_vector(DickeState::Excited)).vectorized();
  CHECK(dicke_population(e, DickeState::Excited) == Approx(std::exp(-2.6)).epsilon(1e-12));
}

TEST_CASE("sandwich implements X -> A X B") {
  std::mt19937_64 rng(9);
  const Matrix4 a = oracle::random_state(rng);
  const Matrix4 b = oracle::random_state(rng) * Complex(0.3, 1.1);
  const Matrix4 x = oracle::random_state(rng);
  CHECK((unvectorize(sandwich(a, b) * vectorize(x)) - a * x * b).cwiseAbs().maxCoeff() < 1e-14);
}
