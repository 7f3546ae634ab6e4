#pragma once

#include <array>
#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "aqmet/model.hpp"

// Parameter estimation around the anticrossing: closed-form and numeric
// quantum Fisher information, the optimal two-outcome measurement and its
// rotation + zz-coupling gate realization, the three-point reconstruction
// of the Fisher information with its error budget, and the sensitivity /
// bandwidth / accuracy figures of merit.

namespace aqmet {

struct MeasurementBasis {
  double bz_hat = 0.0;
  double bx = 0.0;
  std::array<Vector, 4> vectors;            // orthonormal, 4-dim
  std::array<int, 4> eigenvalues{1, -1, 0, 0};
};

struct Rotation {
  int spin = 1;     // 1 or 2
  char axis = 'x';  // 'x', 'y' or 'z'
  double angle = 0.0;
};

struct ZzCoupling {
  double angle = 0.0;  // exp(-i angle sz1 sz2)
};

using GateOp = std::variant<Rotation, ZzCoupling>;

struct GateSequence {
  std::vector<GateOp> ops;   // applied to the state in list order
  double global_phase = 0.0;

  bool operator==(const GateSequence& other) const;
};

// Product of the sequence including the global phase factor e^{i phase}.
Matrix gate_sequence_product(const GateSequence& seq);

struct QfiEstimate {
  double value = 0.0;
  double delta = 0.0;
  double p1_minus = 0.0;
  double p1_center = 0.0;
  double p1_plus = 0.0;
};

struct ErrorBudget {
  double delta1 = 0.0;
  double delta2 = 0.0;
  double total = 0.0;  // delta1 + delta2
};

struct EnergyBasisDecomposition {
  std::array<double, 4> populations{};
  struct Coherence {
    int i = 0;  // 0-based, i < j
    int j = 0;
    double magnitude = 0.0;
    double phase = 0.0;  // <e_i| rho |e_j> = magnitude * e^{-i phase}
  };
  std::vector<Coherence> coherences;  // the six i < j pairs
};

struct SensitivityReport {
  double quantum_variance = 0.0;
  double classical_variance = 0.0;
  double total_variance = 0.0;
  double epsilon = 0.0;
  double n_m = 0.0;
  double snr = 0.0;
};

struct BandwidthResult {
  std::function<double(double)> response;  // R(bz)
  double bandwidth = 0.0;                  // full width at R_max / sqrt2
};

// 2 bx^2 / [(1-bz)^2 + 2 bx^2]^2; peaks at bz = 1 with value 1/(2 bx^2).
double qfi_analytic(double bz, double bx);

// 4 (<dg|dg> - |<g|dg>|^2) with the derivative by central difference.
double qfi_numeric(const std::function<Vector(double)>& state_family,
                   double bz, double db = 1e-5);

// The four optimal projectors at the design estimate bz_hat, in the
// half-angle form phi = theta_hat/2 + pi/4:
//   v1 =  cos(phi)|11> + sin(phi)|b>     v2 = -sin(phi)|11> + cos(phi)|b>
//   v3 =  cos(phi)|00> + sin(phi)|c>     v4 = -sin(phi)|00> + cos(phi)|c>
// with |b>, |c> the symmetric/antisymmetric |01>,|10> combinations.
MeasurementBasis optimal_basis(double bz_hat, double bx);

// p_m = <v_m| rho |v_m>.
std::array<double, 4> measure_probs(const Matrix& rho,
                                    const MeasurementBasis& basis);

// 1/2 + 1/2 sin(theta_hat - theta), the ground-state value of p_1.
double ideal_prob(double bz, double bz_hat, double bx);

// Three-point difference reconstruction
//   F = [(p(bz+d) - p(bz-d)) / 2d]^2 [1/p(bz) + 1/(1-p(bz))].
QfiEstimate reconstruct_qfi(const std::function<double(double)>& p_family,
                            double bz, double delta);

// Leading-order reconstruction bias F_rec - F_exact for the ideal family:
//   4 d^2 bx^2 [(bz-1)^2 - bx^2] / [(1-bz)^2 + 2 bx^2]^4,
// equal to -d^2/(4 bx^4) at the critical point.
double delta1(double bz, double bx, double delta);

// First-order state-deviation error, with dev_pm = p_sim(bz+-d) - p_ideal:
//   -2 sqrt2 bx / (2 bx^2 + (bz-1)^2) * (dev_plus - dev_minus) / d.
double delta2(double p_sim_plus, double p_sim_minus, double p_ideal_plus,
              double p_ideal_minus, double bz, double bx, double delta);

inline ErrorBudget error_budget(double d1, double d2) {
  return {d1, d2, d1 + d2};
}

// Populations and coherences of rho in the eigenbasis_states frame.
EnergyBasisDecomposition energy_decomposition(const Matrix& rho, double bz,
                                              double bx);

// Real orthogonal map v_opt^m -> v_loc^m with v_loc = {|+,1>,|-,1>,|+,0>,
// |-,0>}; determinant +1.
Matrix build_uo(double bz_hat, double bx);

// Factors an SO(4) matrix through the magic basis into local rotations:
// CNOT identity, S/H gates as rotations, and one x-y-x Euler triple per
// spin. The returned sequence reproduces u exactly up to the recorded
// global phase.
GateSequence decompose_uo(const Matrix& u);

// Circuit phases from the two-parameter form of the measurement circuit:
// phi1 = atan2(bz_hat - 1, 0) - pi/4, phi2 = |theta_hat - pi/2|.
std::pair<double, double> circuit_phase_params(double bz_hat, double bx);

// The fixed 4x4 unitary conjugating SO(4) into SU(2) x SU(2), and its
// realization as a CNOT plus single-spin S/H rotations.
Matrix magic_matrix();
GateSequence magic_gate_sequence();

SensitivityReport sensitivity(double bz, double bz_hat, double bx,
                              double epsilon, double n_m, double snr);

// R(bz) = 2 bx / [(1-bz)^2 + 2 bx^2]; bandwidth 2 sqrt(2(sqrt2 - 1)) bx.
BandwidthResult response_and_bandwidth(double bx);

// Inverts the measured signal m = sin(theta_hat - theta):
//   bz = 1 - sqrt2 bx / tan(theta_hat - asin(m)).
double deduce_bz(double m, double bz_hat, double bx);

// delta_m / sqrt(F_Q(bz, bx)).
double accuracy(double delta_m, double bz, double bx);

// Field in Tesla: bz pi J / gamma.
double to_tesla(double bz_dimensionless, double j_hz, double gamma);

// Line-oriented gate sequence format: "R <spin> <axis> <angle>",
// "ZZ <angle>", "PHASE <angle>"; '#' starts a comment.
std::string gate_sequence_to_text(const GateSequence& seq);
GateSequence gate_sequence_from_text(const std::string& text);

}  // namespace aqmet
