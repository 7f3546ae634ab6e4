#pragma once

#include <utility>
#include <vector>

#include "aqmet/schedule.hpp"

// Runs a segment plan through piecewise-constant evolution: exact segment
// exponentials, the symmetric split-operator (Trotter) form, or a Lindblad
// integration with per-spin T1/T2 relaxation. Each run records the overlap
// with the instantaneous ground state after every segment.

namespace aqmet {

struct TraceStep {
  int index = 0;
  Matrix state;                  // density matrix after the segment
  double ground_fidelity = 0.0;  // overlap with that segment's ground state
};

struct EvolutionTrace {
  std::vector<TraceStep> steps;
  Matrix final_state;
  double average_fidelity = 0.0;
};

struct RelaxationParams {
  // Index 0 is spin 1 (1H), index 1 is spin 2 (13C); simulation time units.
  std::array<double, 2> t1{};
  std::array<double, 2> t2{};

  void validate() const;
};

EvolutionTrace run_exact(const SegmentPlan& plan, const Vector& initial);

// Per-segment unitary e^{-i Bx Sx dt/2} e^{-i (Bz[i] Sz + zz) dt}
// e^{-i Bx Sx dt/2}; second-order accurate in dt.
EvolutionTrace run_trotter(const SegmentPlan& plan, const Vector& initial);

// |Tr(U_i^dag U_i^exp)| / 4 for segment i.
double segment_gate_fidelity(int i, const SegmentPlan& plan);

// Segment Hamiltonian plus per-spin amplitude damping (rate 1/T1) and pure
// dephasing (rate 1/T2 - 1/(2 T1), clipped at 0), integrated by fixed-step
// RK4 with `substeps` steps per segment.
EvolutionTrace run_with_relaxation(const SegmentPlan& plan,
                                   const Matrix& initial,
                                   const RelaxationParams& relax,
                                   int substeps = 32);

// Average relaxed fidelity versus segment count at fixed per-segment
// duration (total time grows with the count); returns the best count and
// the fidelity curve aligned with m_candidates.
std::pair<int, std::vector<double>> optimize_step_count(
    const FieldConfig& cfg, const Schedule& sch, const RelaxationParams& relax,
    const std::vector<int>& m_candidates);

}  // namespace aqmet
