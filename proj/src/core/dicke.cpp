#include "rddi/dicke.hpp"

#include <cmath>

namespace rddi {

namespace {
constexpr int kEE = 0;
constexpr int kEG = 1;
constexpr int kGE = 2;
constexpr int kGG = 3;
}  // namespace

const char* to_string(DickeState state) {
  switch (state) {
    case DickeState::Excited:
      return "e";
    case DickeState::Symmetric:
      return "s";
    case DickeState::Antisymmetric:
      return "a";
    case DickeState::Ground:
      return "g";
  }
  return "?";
}

Vector4 dicke_vector(DickeState state) {
  const double r = 1.0 / std::sqrt(2.0);
  Vector4 v = Vector4::Zero();
  switch (state) {
    case DickeState::Excited:
      v(kEE) = 1.0;
      break;
    case DickeState::Symmetric:
      v(kGE) = r;
      v(kEG) = r;
      break;
    case DickeState::Antisymmetric:
      v(kGE) = r;
      v(kEG) = -r;
      break;
    case DickeState::Ground:
      v(kGG) = 1.0;
      break;
  }
  return v;
}

Matrix4 dicke_basis() {
  Matrix4 b;
  b.col(0) = dicke_vector(DickeState::Excited);
  b.col(1) = dicke_vector(DickeState::Symmetric);
  b.col(2) = dicke_vector(DickeState::Antisymmetric);
  b.col(3) = dicke_vector(DickeState::Ground);
  return b;
}

double PopulationVector::operator[](DickeState state) const {
  switch (state) {
    case DickeState::Excited:
      return excited;
    case DickeState::Symmetric:
      return symmetric;
    case DickeState::Antisymmetric:
      return antisymmetric;
    case DickeState::Ground:
      return ground;
  }
  return 0.0;
}

namespace {

// <psi|rho|psi> for the single-excitation states only needs the eg/ge block.
double single_excitation(Complex eg_eg, Complex ge_ge, Complex ge_eg, double sign) {
  return 0.5 * (eg_eg.real() + ge_ge.real()) + sign * ge_eg.real();
}

}  // namespace

PopulationVector dicke_populations(const Matrix4& rho) {
  PopulationVector p;
  p.excited = rho(kEE, kEE).real();
  p.symmetric = single_excitation(rho(kEG, kEG), rho(kGE, kGE), rho(kGE, kEG), 1.0);
  p.antisymmetric = single_excitation(rho(kEG, kEG), rho(kGE, kGE), rho(kGE, kEG), -1.0);
  p.ground = rho(kGG, kGG).real();
  return p;
}

double dicke_population(const Vector16& v, DickeState state) {
  // column-stacked: rho(row, col) = v(4 col + row)
  auto at = [&v](int row, int col) { return v(4 * col + row); };
  switch (state) {
    case DickeState::Excited:
      return at(kEE, kEE).real();
    case DickeState::Symmetric:
      return single_excitation(at(kEG, kEG), at(kGE, kGE), at(kGE, kEG), 1.0);
    case DickeState::Antisymmetric:
      return single_excitation(at(kEG, kEG), at(kGE, kGE), at(kGE, kEG), -1.0);
    case DickeState::Ground:
      return at(kGG, kGG).real();
  }
  return 0.0;
}

}  // namespace rddi
