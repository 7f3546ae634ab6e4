#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>

// Dense complex linear algebra for the 2x2 / 4x4 operators used throughout:
// Hermitian eigendecomposition with a reproducible eigenvector convention,
// unitary exponentials, and state/gate fidelities.
//
// Conventions used by every module:
//   * two-spin basis order |00>, |01>, |10>, |11>, spin 1 = left factor
//   * |0> is the +1 eigenstate of sigma_z
//   * all quantities dimensionless, time unit 2/(pi J)

namespace aqmet {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

struct EigenSystem {
  Eigen::VectorXd values;  // ascending
  Matrix vectors;          // column k pairs with values[k]
};

// Largest asymmetry max|h(i,j) - conj(h(j,i))| of a square matrix.
double hermiticity_defect(const Matrix& h);

// max-norm of U U^dag - 1.
double unitarity_defect(const Matrix& u);

// Throws std::invalid_argument naming the defect when h is not Hermitian
// within tol.
void require_hermitian(const Matrix& h, double tol = 1e-12);

// Eigendecomposition of a Hermitian matrix with a deterministic convention:
// eigenvalues ascending; within a degenerate block the eigenvectors are the
// Gram-Schmidt projections of the canonical basis vectors (fixed order);
// every vector is phased so its largest-magnitude component is real positive.
EigenSystem herm_eig(const Matrix& h);

// e^{-i h t} through the spectral decomposition of Hermitian h.
Matrix expm_unitary(const Matrix& h, double t);

// Overlap fidelity Tr(r1 r2) / sqrt(Tr(r1^2) Tr(r2^2)).
// Equals |<psi1|psi2>|^2 when both arguments are pure.
double overlap_fidelity(const Matrix& r1, const Matrix& r2);

inline Matrix projector(const Vector& v) { return v * v.adjoint(); }

inline double state_fidelity(const Vector& a, const Vector& b) {
  Complex ov = a.adjoint() * b;
  return std::norm(ov);
}

}  // namespace aqmet
