#include "aqmet/noise.hpp"

#include <cmath>
#include <sstream>

#include "aqmet/metrology.hpp"

namespace aqmet {

void BathSpec::validate() const {
  if (!(coupling >= 0.0)) {
    throw std::invalid_argument("bath coupling must be >= 0");
  }
  if (!(inv_temperature > 0.0)) {
    throw std::invalid_argument("bath inverse temperature must be > 0");
  }
}

double bose_occupation(double omega_gap, double beta) {
  if (!(omega_gap > 0.0)) {
    throw std::invalid_argument("bose occupation needs omega_gap > 0");
  }
  return 1.0 / std::expm1(beta * omega_gap);
}

namespace {

struct Jump {
  Matrix op;        // |to><from|
  Matrix projector; // |from><from|
  double rate = 0.0;
};

// Thermal jumps in the eigenbasis of h: for each spin and each eigenstate
// pair (a below b), absorption a->b at rate 2 lambda^2 N and emission b->a
// at 2 lambda^2 (N+1), both weighted by |<b| sigma_+ |a>|^2. Degenerate
// pairs carry no weight (the spectral density vanishes at zero gap).
std::vector<Jump> thermal_jumps(const Matrix& h, const BathSpec& bath) {
  std::vector<Jump> jumps;
  if (bath.coupling == 0.0) return jumps;
  EigenSystem sys = herm_eig(h);
  const double lambda2 = bath.coupling * bath.coupling;
  Matrix sigma_plus(2, 2);
  sigma_plus << 0, 1, 0, 0;
  const Matrix sp1 = single_spin(sigma_plus, 1);
  const Matrix sp2 = single_spin(sigma_plus, 2);
  const Eigen::Index n = sys.values.size();
  for (Eigen::Index a = 0; a < n; ++a) {
    for (Eigen::Index b = 0; b < n; ++b) {
      double gap_ba = sys.values[b] - sys.values[a];
      if (!(gap_ba > 1e-12)) continue;
      double occupation = bose_occupation(gap_ba, bath.inv_temperature);
      for (const Matrix* sp : {&sp1, &sp2}) {
        Complex me = (sys.vectors.col(b).adjoint() * (*sp) *
                      sys.vectors.col(a))
                         .value();
        double weight = std::norm(me);
        if (weight < 1e-30) continue;
        Matrix up = sys.vectors.col(b) * sys.vectors.col(a).adjoint();
        Matrix down = up.adjoint();
        jumps.push_back({up, projector(Vector(sys.vectors.col(a))),
                         2.0 * lambda2 * weight * occupation});
        jumps.push_back({down, projector(Vector(sys.vectors.col(b))),
                         2.0 * lambda2 * weight * (occupation + 1.0)});
      }
    }
  }
  return jumps;
}

Matrix master_rhs(const Matrix& rho, const Matrix& h,
                  const std::vector<Jump>& jumps) {
  Matrix d = Complex(0, -1) * (h * rho - rho * h);
  for (const auto& j : jumps) {
    if (j.rate == 0.0) continue;
    d += j.rate * (j.op * rho * j.op.adjoint() -
                   0.5 * (j.projector * rho + rho * j.projector));
  }
  return d;
}

Matrix rk4_master(Matrix rho, const Matrix& h, const std::vector<Jump>& jumps,
                  double dt, int steps) {
  for (int n = 0; n < steps; ++n) {
    Matrix k1 = master_rhs(rho, h, jumps);
    Matrix k2 = master_rhs(rho + 0.5 * dt * k1, h, jumps);
    Matrix k3 = master_rhs(rho + 0.5 * dt * k2, h, jumps);
    Matrix k4 = master_rhs(rho + dt * k3, h, jumps);
    rho += dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return rho;
}

void check_physical(const Matrix& rho, const char* where) {
  double drift = std::abs(rho.trace().real() - 1.0);
  if (drift > 1e-8) {
    std::ostringstream msg;
    msg << where << ": trace drift " << drift;
    throw std::runtime_error(msg.str());
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (rho + rho.adjoint()));
  if (es.eigenvalues().minCoeff() < -1e-8) {
    std::ostringstream msg;
    msg << where << ": negative eigenvalue " << es.eigenvalues().minCoeff();
    throw std::runtime_error(msg.str());
  }
}

double qfi_from_snapshots(const Matrix& rho_minus, const Matrix& rho_center,
                          const Matrix& rho_plus, double db) {
  const double tau = 1e-12;
  Matrix drho = (rho_plus - rho_minus) / (2.0 * db);
  EigenSystem sys = herm_eig(rho_center);
  double f = 0.0;
  const Eigen::Index n = sys.values.size();
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      double denom = sys.values[i] + sys.values[j];
      if (denom <= tau) continue;
      Complex me =
          (sys.vectors.col(i).adjoint() * drho * sys.vectors.col(j)).value();
      f += 2.0 * std::norm(me) / denom;
    }
  }
  return f;
}

}  // namespace

Matrix master_step(const Matrix& rho, const Matrix& h_s, const BathSpec& bath,
                   double dt) {
  bath.validate();
  auto jumps = thermal_jumps(h_s, bath);
  Matrix out = rk4_master(rho, h_s, jumps, dt, 1);
  check_physical(out, "master_step");
  return out;
}

EvolutionTrace evolve_master(const SegmentPlan& plan, const Matrix& initial,
                             const BathSpec& bath, int substeps) {
  bath.validate();
  if (substeps < 8) throw std::invalid_argument("substeps must be >= 8");
  EvolutionTrace trace;
  Matrix rho = initial;
  double sum = 0.0;
  for (int i = 0; i < plan.segments(); ++i) {
    Matrix h = build_perturbed(plan.bz_list[i], plan.bx);
    auto jumps = thermal_jumps(h, bath);
    rho = rk4_master(rho, h, jumps, plan.delta_t / substeps, substeps);
    check_physical(rho, "evolve_master");
    TraceStep step;
    step.index = i;
    step.state = rho;
    step.ground_fidelity = overlap_fidelity(
        projector(Vector(herm_eig(h).vectors.col(0))), rho);
    sum += step.ground_fidelity;
    trace.steps.push_back(std::move(step));
  }
  trace.final_state = rho;
  trace.average_fidelity =
      trace.steps.empty() ? 0.0 : sum / trace.steps.size();
  return trace;
}

double qfi_mixed(const std::function<Matrix(double)>& rho_family, double bz,
                 double db) {
  if (!(db > 0.0)) throw std::invalid_argument("db must be > 0");
  return qfi_from_snapshots(rho_family(bz - db), rho_family(bz),
                            rho_family(bz + db), db);
}

SchemeCurve conventional_scheme(double bz, const BathSpec& bath,
                                const std::vector<double>& t_grid,
                                double dt, double db) {
  bath.validate();
  for (size_t i = 1; i < t_grid.size(); ++i) {
    if (!(t_grid[i] > t_grid[i - 1])) {
      throw std::invalid_argument("t_grid must be increasing");
    }
  }
  Vector ghz = Vector::Zero(4);
  ghz[0] = 1.0 / std::sqrt(2.0);
  ghz[3] = ghz[0];
  const Matrix rho0 = projector(ghz);
  const Matrix sz_sum =
      single_spin(pauli_z(), 1) + single_spin(pauli_z(), 2);

  // Three field offsets advanced in lockstep; snapshots at the grid times.
  std::array<double, 3> fields{bz - db, bz, bz + db};
  std::array<Matrix, 3> rho{rho0, rho0, rho0};
  std::array<Matrix, 3> h;
  std::array<std::vector<Jump>, 3> jumps;
  for (int k = 0; k < 3; ++k) {
    h[k] = fields[k] * sz_sum;
    jumps[k] = thermal_jumps(h[k], bath);
  }

  SchemeCurve curve;
  curve.scheme = "conventional";
  curve.lambda = bath.coupling;
  curve.inv_beta = 1.0 / bath.inv_temperature;
  double t = 0.0;
  for (double target : t_grid) {
    if (target < 0.0) throw std::invalid_argument("t_grid must be >= 0");
    while (t < target - 1e-12) {
      double step = std::min(dt, target - t);
      for (int k = 0; k < 3; ++k) {
        rho[k] = rk4_master(rho[k], h[k], jumps[k], step, 1);
      }
      t += step;
    }
    check_physical(rho[1], "conventional_scheme");
    curve.times.push_back(target);
    curve.qfi_values.push_back(qfi_from_snapshots(rho[0], rho[1], rho[2], db));
  }
  return curve;
}

SchemeComparison compare_schemes(const FieldConfig& cfg,
                                 const std::vector<BathSpec>& baths,
                                 const std::vector<double>& t_grid,
                                 const GreedyParams& greedy_params,
                                 int m_plus_1, int substeps) {
  cfg.validate();
  Schedule sch = greedy_schedule(cfg, greedy_params);
  SegmentPlan plan = segment_plan(sch, cfg, m_plus_1,
                                  sch.total_time / m_plus_1);

  SchemeComparison cmp;
  cmp.total_time = plan.total_time();
  const double db = 1e-4;
  for (const BathSpec& bath : baths) {
    cmp.conventional.push_back(
        conventional_scheme(cfg.bzf, bath, t_grid, 0.01, db));

    // Endpoint QFI of the adiabatic run: the unknown field offsets every
    // segment of the sweep.
    auto final_state = [&](double shift) {
      SegmentPlan shifted = plan;
      for (double& b : shifted.bz_list) b += shift;
      Matrix rho0 = projector(Vector(
          herm_eig(build_perturbed(shifted.bz_list[0], cfg.bx))
              .vectors.col(0)));
      return evolve_master(shifted, rho0, bath, substeps).final_state;
    };
    cmp.adiabatic_qfi.push_back(
        qfi_mixed([&](double b) { return final_state(b - cfg.bzf); },
                  cfg.bzf, db));

    // Repeated-conventional envelope (T / t_max) F(t_max) at the argmax of
    // the curve.
    const SchemeCurve& curve = cmp.conventional.back();
    size_t imax = 0;
    for (size_t i = 1; i < curve.qfi_values.size(); ++i) {
      if (curve.qfi_values[i] > curve.qfi_values[imax]) imax = i;
    }
    double t_max = curve.times[imax];
    cmp.envelope.push_back(
        t_max > 0.0 ? cmp.total_time / t_max * curve.qfi_values[imax] : 0.0);
  }
  return cmp;
}

}  // namespace aqmet
