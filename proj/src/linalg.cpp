#include "aqmet/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace aqmet {

double hermiticity_defect(const Matrix& h) {
  return (h - h.adjoint()).cwiseAbs().maxCoeff();
}

double unitarity_defect(const Matrix& u) {
  Matrix d = u * u.adjoint() - Matrix::Identity(u.rows(), u.cols());
  return d.cwiseAbs().maxCoeff();
}

void require_hermitian(const Matrix& h, double tol) {
  if (h.rows() != h.cols()) {
    throw std::invalid_argument("matrix is not square");
  }
  double defect = hermiticity_defect(h);
  if (!(defect <= tol)) {
    std::ostringstream msg;
    msg << "matrix is not Hermitian: max asymmetry " << defect;
    throw std::invalid_argument(msg.str());
  }
}

namespace {

// Phase each column so its largest-magnitude entry is real positive. Ties on
// magnitude resolve to the lowest index.
void fix_phases(Matrix& vecs) {
  for (Eigen::Index c = 0; c < vecs.cols(); ++c) {
    Eigen::Index imax = 0;
    double amax = 0.0;
    for (Eigen::Index r = 0; r < vecs.rows(); ++r) {
      double a = std::abs(vecs(r, c));
      if (a > amax + 1e-14) {
        amax = a;
        imax = r;
      }
    }
    Complex z = vecs(imax, c);
    if (std::abs(z) > 0) vecs.col(c) *= std::conj(z) / std::abs(z);
  }
}

// Replace the eigenvectors of a degenerate block by the Gram-Schmidt
// projections of the canonical basis vectors, taken in index order. The span
// is unchanged, so eigen-residuals are preserved.
void canonicalize_block(Matrix& vecs, Eigen::Index lo, Eigen::Index hi) {
  const Eigen::Index n = vecs.rows();
  const Eigen::Index r = hi - lo;
  if (r < 2) return;
  Matrix p = Matrix::Zero(n, n);
  for (Eigen::Index k = lo; k < hi; ++k) p += projector(vecs.col(k));
  Eigen::Index filled = 0;
  Matrix out(n, r);
  for (Eigen::Index j = 0; j < n && filled < r; ++j) {
    Vector w = p.col(j);  // p * e_j
    for (Eigen::Index k = 0; k < filled; ++k) {
      w -= out.col(k) * (out.col(k).adjoint() * w);
    }
    double norm = w.norm();
    if (norm > 1e-6) out.col(filled++) = w / norm;
  }
  if (filled != r) {
    throw std::runtime_error("degenerate block canonicalization failed");
  }
  vecs.block(0, lo, n, r) = out;
}

}  // namespace

EigenSystem herm_eig(const Matrix& h) {
  require_hermitian(h);
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("Hermitian eigendecomposition did not converge");
  }
  EigenSystem sys{solver.eigenvalues(), solver.eigenvectors()};

  const double scale = std::max(sys.values.cwiseAbs().maxCoeff(), 1.0);
  const double tol = 1e-9 * scale;
  Eigen::Index lo = 0;
  for (Eigen::Index k = 1; k <= sys.values.size(); ++k) {
    if (k == sys.values.size() || sys.values[k] - sys.values[lo] > tol) {
      canonicalize_block(sys.vectors, lo, k);
      lo = k;
    }
  }
  fix_phases(sys.vectors);
  return sys;
}

Matrix expm_unitary(const Matrix& h, double t) {
  if (!std::isfinite(t)) throw std::invalid_argument("time must be finite");
  EigenSystem sys = herm_eig(h);
  Vector phases(sys.values.size());
  for (Eigen::Index k = 0; k < sys.values.size(); ++k) {
    phases[k] = std::exp(Complex(0.0, -sys.values[k] * t));
  }
  return sys.vectors * phases.asDiagonal() * sys.vectors.adjoint();
}

double overlap_fidelity(const Matrix& r1, const Matrix& r2) {
  if (r1.rows() != r2.rows() || r1.cols() != r2.cols()) {
    throw std::invalid_argument("density matrices differ in dimension");
  }
  double p1 = (r1 * r1).trace().real();
  double p2 = (r2 * r2).trace().real();
  if (p1 <= 0.0 || p2 <= 0.0) {
    throw std::invalid_argument("overlap fidelity of a zero-purity matrix");
  }
  double num = (r1 * r2).trace().real();
  return num / std::sqrt(p1 * p2);
}

}  // namespace aqmet
