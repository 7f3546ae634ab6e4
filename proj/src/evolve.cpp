#include "aqmet/evolve.hpp"

#include <cmath>
#include <sstream>

namespace aqmet {

void RelaxationParams::validate() const {
  for (int s = 0; s < 2; ++s) {
    if (!(t1[s] > 0.0) || !(t2[s] > 0.0)) {
      throw std::invalid_argument("relaxation times must be positive");
    }
    if (t2[s] > 2.0 * t1[s] + 1e-12) {
      throw std::invalid_argument("t2 must not exceed 2 t1");
    }
  }
}

namespace {

Matrix segment_hamiltonian(const SegmentPlan& plan, int i) {
  return build_perturbed(plan.bz_list[i], plan.bx);
}

Vector segment_ground(const SegmentPlan& plan, int i) {
  return herm_eig(segment_hamiltonian(plan, i)).vectors.col(0);
}

EvolutionTrace run_unitary(const SegmentPlan& plan, const Vector& initial,
                           bool trotter) {
  if (std::abs(initial.norm() - 1.0) > 1e-10) {
    throw std::invalid_argument("initial state is not normalized");
  }
  EvolutionTrace trace;
  Vector psi = initial;
  double sum = 0.0;
  const Matrix sx_half =
      plan.segments() > 0
          ? expm_unitary(plan.bx * (single_spin(pauli_x(), 1) +
                                    single_spin(pauli_x(), 2)),
                         0.5 * plan.delta_t)
          : Matrix();
  for (int i = 0; i < plan.segments(); ++i) {
    if (trotter) {
      Matrix core = expm_unitary(build_ising(plan.bz_list[i]), plan.delta_t);
      psi = sx_half * (core * (sx_half * psi));
    } else {
      psi = expm_unitary(segment_hamiltonian(plan, i), plan.delta_t) * psi;
    }
    TraceStep step;
    step.index = i;
    step.state = projector(psi);
    step.ground_fidelity = state_fidelity(segment_ground(plan, i), psi);
    sum += step.ground_fidelity;
    trace.steps.push_back(std::move(step));
  }
  trace.final_state = projector(psi);
  trace.average_fidelity =
      trace.steps.empty() ? 0.0 : sum / trace.steps.size();
  return trace;
}

}  // namespace

EvolutionTrace run_exact(const SegmentPlan& plan, const Vector& initial) {
  return run_unitary(plan, initial, false);
}

EvolutionTrace run_trotter(const SegmentPlan& plan, const Vector& initial) {
  return run_unitary(plan, initial, true);
}

double segment_gate_fidelity(int i, const SegmentPlan& plan) {
  if (i < 0 || i >= plan.segments()) {
    throw std::out_of_range("segment index out of range");
  }
  Matrix u = expm_unitary(segment_hamiltonian(plan, i), plan.delta_t);
  Matrix sx_half = expm_unitary(
      plan.bx * (single_spin(pauli_x(), 1) + single_spin(pauli_x(), 2)),
      0.5 * plan.delta_t);
  Matrix u_exp =
      sx_half * expm_unitary(build_ising(plan.bz_list[i]), plan.delta_t) *
      sx_half;
  return std::abs((u.adjoint() * u_exp).trace()) / 4.0;
}

namespace {

struct Dissipator {
  Matrix jump;      // L
  Matrix jj;        // L^dag L
  double rate = 0;  // prefactor of L rho L^dag - {L^dag L, rho}/2
};

std::vector<Dissipator> relaxation_dissipators(const RelaxationParams& relax) {
  std::vector<Dissipator> out;
  Matrix sigma_plus(2, 2);
  sigma_plus << 0, 1, 0, 0;
  for (int s = 0; s < 2; ++s) {
    Matrix damp = single_spin(sigma_plus, s + 1);
    out.push_back({damp, damp.adjoint() * damp, 1.0 / relax.t1[s]});
    double dephase = 1.0 / relax.t2[s] - 0.5 / relax.t1[s];
    if (dephase > 0.0) {
      Matrix sz = single_spin(pauli_z(), s + 1);
      out.push_back({sz, Matrix::Identity(4, 4), 0.5 * dephase});
    }
  }
  return out;
}

Matrix lindblad_rhs(const Matrix& rho, const Matrix& h,
                    const std::vector<Dissipator>& diss) {
  Matrix d = Complex(0, -1) * (h * rho - rho * h);
  for (const auto& term : diss) {
    d += term.rate * (term.jump * rho * term.jump.adjoint() -
                      0.5 * (term.jj * rho + rho * term.jj));
  }
  return d;
}

Matrix rk4_lindblad(Matrix rho, const Matrix& h,
                    const std::vector<Dissipator>& diss, double dt,
                    int steps) {
  for (int n = 0; n < steps; ++n) {
    Matrix k1 = lindblad_rhs(rho, h, diss);
    Matrix k2 = lindblad_rhs(rho + 0.5 * dt * k1, h, diss);
    Matrix k3 = lindblad_rhs(rho + 0.5 * dt * k2, h, diss);
    Matrix k4 = lindblad_rhs(rho + dt * k3, h, diss);
    rho += dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return rho;
}

}  // namespace

EvolutionTrace run_with_relaxation(const SegmentPlan& plan,
                                   const Matrix& initial,
                                   const RelaxationParams& relax,
                                   int substeps) {
  relax.validate();
  if (substeps < 1) throw std::invalid_argument("substeps must be >= 1");
  if (std::abs(initial.trace().real() - 1.0) > 1e-10) {
    throw std::invalid_argument("initial density matrix must have trace 1");
  }
  auto diss = relaxation_dissipators(relax);
  EvolutionTrace trace;
  Matrix rho = initial;
  double sum = 0.0;
  for (int i = 0; i < plan.segments(); ++i) {
    Matrix h = segment_hamiltonian(plan, i);
    rho = rk4_lindblad(rho, h, diss, plan.delta_t / substeps, substeps);
    double drift = std::abs(rho.trace().real() - 1.0);
    if (drift > 1e-6) {
      std::ostringstream msg;
      msg << "trace drifted by " << drift << " at segment " << i;
      throw std::runtime_error(msg.str());
    }
    TraceStep step;
    step.index = i;
    step.state = rho;
    step.ground_fidelity =
        overlap_fidelity(projector(segment_ground(plan, i)), rho);
    sum += step.ground_fidelity;
    trace.steps.push_back(std::move(step));
  }
  trace.final_state = rho;
  trace.average_fidelity =
      trace.steps.empty() ? 0.0 : sum / trace.steps.size();
  return trace;
}

std::pair<int, std::vector<double>> optimize_step_count(
    const FieldConfig& cfg, const Schedule& sch, const RelaxationParams& relax,
    const std::vector<int>& m_candidates) {
  if (m_candidates.empty()) {
    throw std::invalid_argument("need at least one segment-count candidate");
  }
  // The per-segment duration is the schedule's own step time, so the total
  // run time grows with the candidate count: finer plans track the ground
  // state better while longer runs lose more to relaxation.
  double dt = sch.total_time / (sch.s.size() - 1);
  std::vector<double> curve;
  curve.reserve(m_candidates.size());
  int best = m_candidates.front();
  double best_avg = -1.0;
  for (int m_plus_1 : m_candidates) {
    if (m_plus_1 < 2) {
      throw std::invalid_argument("segment-count candidates must be >= 2");
    }
    SegmentPlan plan = segment_plan(sch, cfg, m_plus_1, dt);
    Matrix rho0 = projector(segment_ground(plan, 0));
    EvolutionTrace trace = run_with_relaxation(plan, rho0, relax);
    curve.push_back(trace.average_fidelity);
    if (trace.average_fidelity > best_avg) {
      best_avg = trace.average_fidelity;
      best = m_plus_1;
    }
  }
  return {best, curve};
}

}  // namespace aqmet
