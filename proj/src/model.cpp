#include "aqmet/model.hpp"

#include <cmath>

namespace aqmet {

void FieldConfig::validate() const {
  if (!(bx > 0.0)) throw std::invalid_argument("FieldConfig: bx must be > 0");
  if (!std::isfinite(bz0) || !std::isfinite(bzf)) {
    throw std::invalid_argument("FieldConfig: fields must be finite");
  }
}

Matrix pauli_x() {
  Matrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

Matrix pauli_y() {
  Matrix m(2, 2);
  m << 0, Complex(0, -1), Complex(0, 1), 0;
  return m;
}

Matrix pauli_z() {
  Matrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Matrix single_spin(const Matrix& op, int spin) {
  if (spin != 1 && spin != 2) {
    throw std::invalid_argument("spin index must be 1 or 2");
  }
  Matrix id = Matrix::Identity(2, 2);
  return spin == 1 ? kron(op, id) : kron(id, op);
}

Matrix swap_op() {
  Matrix m = Matrix::Zero(4, 4);
  m(0, 0) = 1;
  m(1, 2) = 1;
  m(2, 1) = 1;
  m(3, 3) = 1;
  return m;
}

namespace {

const Matrix& sz_sum() {
  static const Matrix m = single_spin(pauli_z(), 1) + single_spin(pauli_z(), 2);
  return m;
}

const Matrix& sx_sum() {
  static const Matrix m = single_spin(pauli_x(), 1) + single_spin(pauli_x(), 2);
  return m;
}

const Matrix& zz_coupling() {
  static const Matrix m = single_spin(pauli_z(), 1) * single_spin(pauli_z(), 2);
  return m;
}

}  // namespace

Matrix build_ising(double bz) {
  if (!std::isfinite(bz)) throw std::invalid_argument("bz must be finite");
  return bz * sz_sum() + zz_coupling();
}

Matrix build_perturbed(double bz, double bx) {
  if (!(bx > 0.0)) throw std::invalid_argument("bx must be > 0");
  return build_ising(bz) + bx * sx_sum();
}

Matrix build_adiabatic(double a, const FieldConfig& cfg) {
  cfg.validate();
  if (!(a >= 0.0 && a <= 1.0)) {
    throw std::invalid_argument("interpolation parameter a must be in [0,1]");
  }
  return build_perturbed((1.0 - a) * cfg.bz0 + a * cfg.bzf, cfg.bx);
}

Matrix effective_hamiltonian(double bz, double bx) {
  double abz = std::abs(bz);
  Matrix m(2, 2);
  m << -abz + (1.0 - abz), std::sqrt(2.0) * bx,  //
      std::sqrt(2.0) * bx, -abz - (1.0 - abz);
  return m;
}

double gap(double a, const FieldConfig& cfg) {
  cfg.validate();
  if (!(a >= 0.0 && a <= 1.0)) {
    throw std::invalid_argument("interpolation parameter a must be in [0,1]");
  }
  double u = 1.0 - cfg.bz0 + (cfg.bz0 - cfg.bzf) * a;
  return 2.0 * std::sqrt(2.0 * cfg.bx * cfg.bx + u * u);
}

double mixing_angle(double bz, double bx) {
  if (!(bx > 0.0)) throw std::invalid_argument("bx must be > 0");
  return std::atan2(std::sqrt(2.0) * bx, 1.0 - bz);
}

Vector analytic_ground_state(double bz, double bx) {
  if (!(bz > 0.0)) {
    throw std::invalid_argument(
        "analytic ground state is only defined on the bz > 0 branch");
  }
  double half = 0.5 * mixing_angle(bz, bx);
  Vector v = Vector::Zero(4);
  v[1] = std::cos(half) / std::sqrt(2.0);
  v[2] = v[1];
  v[3] = -std::sin(half);
  return v;
}

std::array<Vector, 4> eigenbasis_states(double bz, double bx) {
  if (!(bz > 0.0)) {
    throw std::invalid_argument(
        "eigenbasis states are only defined on the bz > 0 branch");
  }
  double half = 0.5 * mixing_angle(bz, bx);
  double c = std::cos(half);
  double s = std::sin(half);
  const double r = 1.0 / std::sqrt(2.0);

  Vector e1 = Vector::Zero(4), e2 = Vector::Zero(4);
  e1[1] = c * r;
  e1[2] = c * r;
  e1[3] = -s;
  e2[1] = s * r;
  e2[2] = s * r;
  e2[3] = c;

  Vector e3 = Vector::Zero(4), e4 = Vector::Zero(4);
  e3[0] = -s;
  e3[1] = c * r;
  e3[2] = -c * r;
  e4[0] = c;
  e4[1] = s * r;
  e4[2] = -s * r;
  return {e1, e2, e3, e4};
}

}  // namespace aqmet
