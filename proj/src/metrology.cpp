#include "aqmet/metrology.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace aqmet {

namespace {

constexpr double kPi = std::numbers::pi;
const double kSqrt2 = std::sqrt(2.0);

}  // namespace

double qfi_analytic(double bz, double bx) {
  if (!(bx > 0.0)) throw std::invalid_argument("bx must be > 0");
  double d = (1.0 - bz) * (1.0 - bz) + 2.0 * bx * bx;
  return 2.0 * bx * bx / (d * d);
}

double qfi_numeric(const std::function<Vector(double)>& state_family,
                   double bz, double db) {
  if (!(db > 0.0)) throw std::invalid_argument("db must be > 0");
  Vector plus = state_family(bz + db);
  Vector minus = state_family(bz - db);
  Vector center = state_family(bz);
  for (const Vector* v : {&plus, &minus, &center}) {
    if (std::abs(v->norm() - 1.0) > 1e-8) {
      throw std::invalid_argument("state family output is not normalized");
    }
  }
  Vector dg = (plus - minus) / (2.0 * db);
  double dd = (dg.adjoint() * dg).value().real();
  Complex gd = (center.adjoint() * dg).value();
  return 4.0 * (dd - std::norm(gd));
}

MeasurementBasis optimal_basis(double bz_hat, double bx) {
  double phi = 0.5 * mixing_angle(bz_hat, bx) + 0.25 * kPi;
  double c = std::cos(phi);
  double s = std::sin(phi);
  const double r = 1.0 / kSqrt2;

  MeasurementBasis basis;
  basis.bz_hat = bz_hat;
  basis.bx = bx;
  for (auto& v : basis.vectors) v = Vector::Zero(4);
  // span{|11>, (|01>+|10>)/sqrt2}
  basis.vectors[0][3] = c;
  basis.vectors[0][1] = s * r;
  basis.vectors[0][2] = s * r;
  basis.vectors[1][3] = -s;
  basis.vectors[1][1] = c * r;
  basis.vectors[1][2] = c * r;
  // span{|00>, (|01>-|10>)/sqrt2}
  basis.vectors[2][0] = c;
  basis.vectors[2][1] = s * r;
  basis.vectors[2][2] = -s * r;
  basis.vectors[3][0] = -s;
  basis.vectors[3][1] = c * r;
  basis.vectors[3][2] = -c * r;
  return basis;
}

std::array<double, 4> measure_probs(const Matrix& rho,
                                    const MeasurementBasis& basis) {
  std::array<double, 4> p{};
  for (int m = 0; m < 4; ++m) {
    p[m] = (basis.vectors[m].adjoint() * rho * basis.vectors[m]).value().real();
  }
  return p;
}

double ideal_prob(double bz, double bz_hat, double bx) {
  double theta_hat = mixing_angle(bz_hat, bx);
  double theta = mixing_angle(bz, bx);
  return 0.5 + 0.5 * std::sin(theta_hat - theta);
}

QfiEstimate reconstruct_qfi(const std::function<double(double)>& p_family,
                            double bz, double delta) {
  if (!(delta > 0.0)) throw std::invalid_argument("delta must be > 0");
  QfiEstimate est;
  est.delta = delta;
  est.p1_minus = p_family(bz - delta);
  est.p1_center = p_family(bz);
  est.p1_plus = p_family(bz + delta);
  if (!(est.p1_center > 0.0 && est.p1_center < 1.0)) {
    std::ostringstream msg;
    msg << "degenerate denominator: p1(bz) = " << est.p1_center;
    throw std::runtime_error(msg.str());
  }
  double slope = (est.p1_plus - est.p1_minus) / (2.0 * delta);
  est.value = slope * slope *
              (1.0 / est.p1_center + 1.0 / (1.0 - est.p1_center));
  return est;
}

double delta1(double bz, double bx, double delta) {
  if (!(bx > 0.0)) throw std::invalid_argument("bx must be > 0");
  double w2 = (bz - 1.0) * (bz - 1.0);
  double d = w2 + 2.0 * bx * bx;
  return 4.0 * delta * delta * bx * bx * (w2 - bx * bx) / (d * d * d * d);
}

double delta2(double p_sim_plus, double p_sim_minus, double p_ideal_plus,
              double p_ideal_minus, double bz, double bx, double delta) {
  if (!(delta > 0.0)) throw std::invalid_argument("delta must be > 0");
  double dev_plus = p_sim_plus - p_ideal_plus;
  double dev_minus = p_sim_minus - p_ideal_minus;
  double coeff = 2.0 * kSqrt2 * bx / (2.0 * bx * bx + (bz - 1.0) * (bz - 1.0));
  return -coeff * (dev_plus - dev_minus) / delta;
}

EnergyBasisDecomposition energy_decomposition(const Matrix& rho, double bz,
                                              double bx) {
  auto basis = eigenbasis_states(bz, bx);
  EnergyBasisDecomposition dec;
  for (int i = 0; i < 4; ++i) {
    dec.populations[i] =
        (basis[i].adjoint() * rho * basis[i]).value().real();
  }
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      Complex entry = (basis[i].adjoint() * rho * basis[j]).value();
      dec.coherences.push_back(
          {i, j, std::abs(entry), -std::arg(entry)});
    }
  }
  return dec;
}

Matrix build_uo(double bz_hat, double bx) {
  MeasurementBasis opt = optimal_basis(bz_hat, bx);
  std::array<Vector, 4> loc;
  for (auto& v : loc) v = Vector::Zero(4);
  const double r = 1.0 / kSqrt2;
  loc[0][1] = r;   // |+,1>
  loc[0][3] = r;
  loc[1][1] = r;   // |-,1>
  loc[1][3] = -r;
  loc[2][0] = r;   // |+,0>
  loc[2][2] = r;
  loc[3][0] = r;   // |-,0>
  loc[3][2] = -r;
  Matrix u = Matrix::Zero(4, 4);
  for (int m = 0; m < 4; ++m) u += loc[m] * opt.vectors[m].adjoint();
  return u;
}

// --- gate sequences -------------------------------------------------------

namespace {

Matrix rotation_matrix(const Rotation& rot) {
  Matrix gen;
  switch (rot.axis) {
    case 'x': gen = pauli_x(); break;
    case 'y': gen = pauli_y(); break;
    case 'z': gen = pauli_z(); break;
    default: throw std::invalid_argument("rotation axis must be x, y or z");
  }
  return expm_unitary(single_spin(gen, rot.spin), 0.5 * rot.angle);
}

Matrix op_matrix(const GateOp& op) {
  if (const auto* rot = std::get_if<Rotation>(&op)) {
    return rotation_matrix(*rot);
  }
  const auto& zz = std::get<ZzCoupling>(op);
  return expm_unitary(single_spin(pauli_z(), 1) * single_spin(pauli_z(), 2),
                      zz.angle);
}

void append_cnot_control2(std::vector<GateOp>& ops) {
  // CNOT with control on spin 2: sqrt(i) Rz2(pi/2) Rz1(-pi/2) Rx1(pi/2)
  // exp(-i pi/4 zz) Ry1(pi/2), emitted in application order; the sqrt(i)
  // phase is accounted by the caller.
  ops.push_back(Rotation{1, 'y', kPi / 2});
  ops.push_back(ZzCoupling{kPi / 4});
  ops.push_back(Rotation{1, 'x', kPi / 2});
  ops.push_back(Rotation{1, 'z', -kPi / 2});
  ops.push_back(Rotation{2, 'z', kPi / 2});
}

// Magic-basis gates in application order; total accumulated phase 5 pi / 4:
// pi/4 each for the two S gates, pi/2 for H, pi/4 for the CNOT.
void append_magic(std::vector<GateOp>& ops) {
  ops.push_back(Rotation{1, 'z', kPi / 2});   // S on spin 1
  ops.push_back(Rotation{2, 'z', kPi / 2});   // S on spin 2
  ops.push_back(Rotation{2, 'z', kPi});       // H on spin 2 ...
  ops.push_back(Rotation{2, 'y', kPi / 2});
  append_cnot_control2(ops);
}

void append_magic_adjoint(std::vector<GateOp>& ops) {
  std::vector<GateOp> fwd;
  append_magic(fwd);
  for (auto it = fwd.rbegin(); it != fwd.rend(); ++it) {
    if (const auto* rot = std::get_if<Rotation>(&*it)) {
      ops.push_back(Rotation{rot->spin, rot->axis, -rot->angle});
    } else {
      ops.push_back(ZzCoupling{-std::get<ZzCoupling>(*it).angle});
    }
  }
}

// x-y-x Euler angles of an SU(2) matrix, via the z-y-z form of H a H.
std::array<double, 3> euler_xyx(const Eigen::Matrix2cd& a) {
  Eigen::Matrix2cd h;
  h << 1, 1, 1, -1;
  h /= kSqrt2;
  Eigen::Matrix2cd v = h * a * h;  // Rz(alpha) Ry(-beta) Rx... Rz(gamma)
  double cmag = std::abs(v(0, 0));
  double smag = std::abs(v(1, 0));
  double beta_zyz = 2.0 * std::atan2(smag, cmag);
  double alpha, gamma;
  if (smag < 1e-12) {
    alpha = 2.0 * std::arg(v(1, 1));
    gamma = 0.0;
  } else if (cmag < 1e-12) {
    alpha = 2.0 * std::arg(v(1, 0));
    gamma = 0.0;
  } else {
    double sum = 2.0 * std::arg(v(1, 1));
    double diff = 2.0 * std::arg(v(1, 0));
    alpha = 0.5 * (sum + diff);
    gamma = 0.5 * (sum - diff);
  }
  return {alpha, -beta_zyz, gamma};
}

}  // namespace

Matrix magic_matrix() {
  Matrix m(4, 4);
  Complex i(0, 1);
  m << 1, i, 0, 0,  //
      0, 0, i, 1,   //
      0, 0, i, -1,  //
      1, -i, 0, 0;
  return m / kSqrt2;
}

GateSequence magic_gate_sequence() {
  GateSequence seq;
  append_magic(seq.ops);
  // pi/4 each for the two S gates, pi/2 for H, pi/4 for the CNOT.
  seq.global_phase = 5.0 * kPi / 4.0;
  return seq;
}

bool GateSequence::operator==(const GateSequence& other) const {
  if (ops.size() != other.ops.size()) return false;
  if (global_phase != other.global_phase) return false;
  for (size_t k = 0; k < ops.size(); ++k) {
    if (ops[k].index() != other.ops[k].index()) return false;
    if (const auto* rot = std::get_if<Rotation>(&ops[k])) {
      const auto& o = std::get<Rotation>(other.ops[k]);
      if (rot->spin != o.spin || rot->axis != o.axis || rot->angle != o.angle)
        return false;
    } else {
      if (std::get<ZzCoupling>(ops[k]).angle !=
          std::get<ZzCoupling>(other.ops[k]).angle)
        return false;
    }
  }
  return true;
}

Matrix gate_sequence_product(const GateSequence& seq) {
  Matrix u = Matrix::Identity(4, 4);
  for (const auto& op : seq.ops) u = op_matrix(op) * u;
  return std::exp(Complex(0, seq.global_phase)) * u;
}

GateSequence decompose_uo(const Matrix& u) {
  if (u.rows() != 4 || u.cols() != 4) {
    throw std::invalid_argument("decompose_uo expects a 4x4 matrix");
  }
  double im = u.imag().cwiseAbs().maxCoeff();
  double orth = (u * u.transpose() - Matrix::Identity(4, 4))
                    .cwiseAbs()
                    .maxCoeff();
  double det_defect = std::abs(u.determinant() - Complex(1.0, 0.0));
  if (im > 1e-8 || orth > 1e-8 || det_defect > 1e-8) {
    std::ostringstream msg;
    msg << "input is not SO(4): max imaginary part " << im
        << ", orthogonality defect " << orth << ", det defect " << det_defect;
    throw std::invalid_argument(msg.str());
  }

  Matrix magic = magic_matrix();
  Matrix k = magic.adjoint() * u * magic;  // in SU(2) x SU(2)

  // Nearest-Kronecker split: rearrange K so that a rank-1 factorization
  // gives vec(A) vec(B)^T.
  Matrix r(4, 4);
  for (int i1 = 0; i1 < 2; ++i1)
    for (int j1 = 0; j1 < 2; ++j1)
      for (int i2 = 0; i2 < 2; ++i2)
        for (int j2 = 0; j2 < 2; ++j2)
          r(2 * i1 + j1, 2 * i2 + j2) = k(2 * i1 + i2, 2 * j1 + j2);
  Eigen::JacobiSVD<Matrix> svd(r, Eigen::ComputeFullU | Eigen::ComputeFullV);
  double sigma = svd.singularValues()[0];
  Vector va = svd.matrixU().col(0) * std::sqrt(sigma);
  Vector vb = svd.matrixV().col(0).conjugate() * std::sqrt(sigma);
  Eigen::Matrix2cd a, b;
  a << va[0], va[1], va[2], va[3];
  b << vb[0], vb[1], vb[2], vb[3];
  // Normalize both factors into SU(2).
  a /= std::sqrt(a.determinant());
  b /= std::sqrt(b.determinant());

  auto ea = euler_xyx(a);
  auto eb = euler_xyx(b);

  GateSequence seq;
  append_magic_adjoint(seq.ops);
  seq.ops.push_back(Rotation{1, 'x', ea[2]});
  seq.ops.push_back(Rotation{1, 'y', ea[1]});
  seq.ops.push_back(Rotation{1, 'x', ea[0]});
  seq.ops.push_back(Rotation{2, 'x', eb[2]});
  seq.ops.push_back(Rotation{2, 'y', eb[1]});
  seq.ops.push_back(Rotation{2, 'x', eb[0]});
  append_magic(seq.ops);

  // The magic phases cancel between M and M^dag; fix the residual phase
  // left by the SU(2) normalization branch.
  Matrix product = gate_sequence_product(seq);
  Complex mismatch = (product.adjoint() * u).trace() / 4.0;
  seq.global_phase = std::arg(mismatch);
  return seq;
}

std::pair<double, double> circuit_phase_params(double bz_hat, double bx) {
  double phi1 = std::atan2(bz_hat - 1.0, 0.0) - 0.25 * kPi;
  double phi2 = std::abs(mixing_angle(bz_hat, bx) - 0.5 * kPi);
  return {phi1, phi2};
}

SensitivityReport sensitivity(double bz, double bz_hat, double bx,
                              double epsilon, double n_m, double snr) {
  if (!(epsilon > 0.0 && n_m > 0.0 && snr > 0.0)) {
    throw std::invalid_argument("sensitivity inputs must be positive");
  }
  double fq = qfi_analytic(bz, bx);
  if (!(fq > 0.0)) throw std::runtime_error("vanishing Fisher information");
  double mis = std::sin(mixing_angle(bz_hat, bx) - mixing_angle(bz, bx));
  SensitivityReport rep;
  rep.epsilon = epsilon;
  rep.n_m = n_m;
  rep.snr = snr;
  rep.quantum_variance =
      (1.0 - epsilon * epsilon * mis * mis) / (n_m * epsilon * epsilon * fq);
  rep.classical_variance = 1.0 / (snr * snr * fq);
  rep.total_variance = rep.quantum_variance + rep.classical_variance;
  return rep;
}

BandwidthResult response_and_bandwidth(double bx) {
  if (!(bx > 0.0)) throw std::invalid_argument("bx must be > 0");
  BandwidthResult res;
  res.response = [bx](double bz) {
    return 2.0 * bx / ((1.0 - bz) * (1.0 - bz) + 2.0 * bx * bx);
  };
  res.bandwidth = 2.0 * std::sqrt(2.0 * (kSqrt2 - 1.0)) * bx;
  return res;
}

double deduce_bz(double m, double bz_hat, double bx) {
  if (!(std::abs(m) < 1.0)) {
    throw std::domain_error("measurement result must satisfy |m| < 1");
  }
  double angle = mixing_angle(bz_hat, bx) - std::asin(m);
  if (std::abs(std::sin(angle)) < 1e-9 * std::abs(std::cos(angle))) {
    throw std::domain_error(
        "deduced field diverges: theta_hat - asin(m) is too close to 0 or pi");
  }
  return 1.0 - kSqrt2 * bx * std::cos(angle) / std::sin(angle);
}

double accuracy(double delta_m, double bz, double bx) {
  return delta_m / std::sqrt(qfi_analytic(bz, bx));
}

double to_tesla(double bz_dimensionless, double j_hz, double gamma) {
  if (!(j_hz > 0.0 && gamma > 0.0)) {
    throw std::invalid_argument("coupling and gyromagnetic ratio must be > 0");
  }
  return bz_dimensionless * kPi * j_hz / gamma;
}

std::string gate_sequence_to_text(const GateSequence& seq) {
  std::ostringstream out;
  out.precision(17);
  for (const auto& op : seq.ops) {
    if (const auto* rot = std::get_if<Rotation>(&op)) {
      out << "R " << rot->spin << ' ' << rot->axis << ' ' << rot->angle
          << '\n';
    } else {
      out << "ZZ " << std::get<ZzCoupling>(op).angle << '\n';
    }
  }
  out << "PHASE " << seq.global_phase << '\n';
  return out.str();
}

GateSequence gate_sequence_from_text(const std::string& text) {
  GateSequence seq;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    if (tag == "R") {
      Rotation rot;
      if (!(ls >> rot.spin >> rot.axis >> rot.angle)) {
        throw std::invalid_argument("malformed rotation line: " + line);
      }
      seq.ops.push_back(rot);
    } else if (tag == "ZZ") {
      ZzCoupling zz;
      if (!(ls >> zz.angle)) {
        throw std::invalid_argument("malformed ZZ line: " + line);
      }
      seq.ops.push_back(zz);
    } else if (tag == "PHASE") {
      if (!(ls >> seq.global_phase)) {
        throw std::invalid_argument("malformed PHASE line: " + line);
      }
    } else {
      throw std::invalid_argument("unknown gate tag: " + tag);
    }
  }
  return seq;
}

}  // namespace aqmet
