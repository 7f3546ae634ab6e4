#pragma once

#include <functional>
#include <string>
#include <vector>

#include "aqmet/evolve.hpp"

// Thermal-bath master equation in the instantaneous eigenbasis of the
// system Hamiltonian (flat spectral density, Bose-Einstein weights),
// mixed-state Fisher information, and the conventional-versus-adiabatic
// scheme comparison.

namespace aqmet {

struct BathSpec {
  double coupling = 0.0;         // lambda >= 0
  double inv_temperature = 1.0;  // beta > 0

  void validate() const;
};

struct SchemeCurve {
  std::vector<double> times;
  std::vector<double> qfi_values;
  std::string scheme;  // "conventional" or "adiabatic"
  double lambda = 0.0;
  double inv_beta = 0.0;
};

struct SchemeComparison {
  std::vector<SchemeCurve> conventional;   // one curve per bath
  std::vector<double> adiabatic_qfi;       // endpoint QFI per bath
  std::vector<double> envelope;            // (T/t_max) F(t_max) per bath
  double total_time = 0.0;                 // adiabatic run time
};

// N(w) = 1 / (e^{beta w} - 1) for w > 0.
double bose_occupation(double omega_gap, double beta);

// One RK4 step of the eigenbasis master equation: for every spin and every
// eigenstate pair, absorption carries weight N and emission N + 1, both with
// the sigma_+ matrix element between the pair.
Matrix master_step(const Matrix& rho, const Matrix& h_s, const BathSpec& bath,
                   double dt);

// master_step applied across all plan segments, `substeps` per segment.
EvolutionTrace evolve_master(const SegmentPlan& plan, const Matrix& initial,
                             const BathSpec& bath, int substeps);

// F = sum_{p_i + p_j > tau} 2 |<i| drho |j>|^2 / (p_i + p_j) with the
// derivative by central difference; tau = 1e-12.
double qfi_mixed(const std::function<Matrix(double)>& rho_family, double bz,
                 double db = 1e-4);

// GHZ probe under bz (sz1 + sz2) with the same master equation; QFI(t) on
// the given grid. Noise-free value is 16 t^2.
SchemeCurve conventional_scheme(double bz, const BathSpec& bath,
                                const std::vector<double>& t_grid,
                                double dt = 0.01, double db = 1e-4);

// For each bath: the conventional curve, its repeated-scheme envelope at the
// adiabatic total time, and the endpoint QFI of the greedy adiabatic run.
SchemeComparison compare_schemes(const FieldConfig& cfg,
                                 const std::vector<BathSpec>& baths,
                                 const std::vector<double>& t_grid,
                                 const GreedyParams& greedy_params,
                                 int m_plus_1 = 100, int substeps = 64);

}  // namespace aqmet
