#pragma once

#include <array>

#include "aqmet/linalg.hpp"

// Two-spin Ising model with longitudinal field bz, its transverse
// perturbation bx, the interpolated adiabatic Hamiltonian, and the analytic
// two-level (effective) description valid for bx << 1 and bz > 0.

namespace aqmet {

struct FieldConfig {
  double bz0;  // initial longitudinal field
  double bzf;  // final longitudinal field
  double bx;   // transverse field, > 0

  void validate() const;
};

// Pauli matrices and two-spin embeddings (basis |00>,|01>,|10>,|11>).
Matrix pauli_x();
Matrix pauli_y();
Matrix pauli_z();
Matrix kron(const Matrix& a, const Matrix& b);
Matrix single_spin(const Matrix& op, int spin);  // spin is 1 or 2
Matrix swap_op();

// bz (sz1 + sz2) + sz1 sz2
Matrix build_ising(double bz);

// build_ising(bz) + bx (sx1 + sx2); rejects bx <= 0.
Matrix build_perturbed(double bz, double bx);

// (1-a) H(bz0) + a H(bzf) = H((1-a) bz0 + a bzf) at fixed bx; 0 <= a <= 1.
Matrix build_adiabatic(double a, const FieldConfig& cfg);

// 2x2 block on {|a>=|11>, |b>=(|01>+|10>)/sqrt2}:
//   -|bz| 1 + (1-|bz|) sigma_z + sqrt2 bx sigma_x
Matrix effective_hamiltonian(double bz, double bx);

// 2 sqrt(2 bx^2 + [1 - bz0 + (bz0 - bzf) a]^2); minimum 2 sqrt2 bx at the
// critical field.
double gap(double a, const FieldConfig& cfg);

// theta = atan2(sqrt2 bx, 1 - bz), in (0, pi) for bx > 0.
double mixing_angle(double bz, double bx);

// -sin(theta/2)|11> + cos(theta/2)(|01>+|10>)/sqrt2, the bz > 0 branch.
Vector analytic_ground_state(double bz, double bx);

// The four states e1..e4 built from theta; e1 is the ground state, e3/e4
// live in span{|00>, (|01>-|10>)/sqrt2}.
std::array<Vector, 4> eigenbasis_states(double bz, double bx);

}  // namespace aqmet
