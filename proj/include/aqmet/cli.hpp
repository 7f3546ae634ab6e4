#pragma once

#include <optional>
#include <string>
#include <vector>

#include "aqmet/evolve.hpp"
#include "aqmet/metrology.hpp"
#include "aqmet/noise.hpp"

// Batch front-end. Every command reads one JSON config, writes CSV/JSON
// files named <experiment>_<label>[...].csv into the output directory, and
// is fully deterministic: identical configs produce identical bytes.
//
// Exit codes: 0 success, 2 config error, 3 numeric-invariant violation.

namespace aqmet {

struct ScalingFit {
  std::vector<double> bx_list;
  std::vector<double> times;
  std::vector<double> sqrt_fq;
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  double loglog_slope = 0.0;  // of F_Q versus T
};

struct RunConfig {
  std::string experiment = "qfi-sweep";
  std::string label = "default";
  std::string output_dir = ".";

  // model
  double bz0 = 20.0;
  double bzf = 0.0;
  double bx = 0.1;
  std::vector<double> bx_list{0.1, 0.15, 0.2, 0.25, 0.3};
  std::vector<double> bz_grid{0.1, 0.3, 0.5, 0.7, 0.85, 0.95, 1.0,
                              1.05, 1.15, 1.3, 1.5, 1.9, 2.3, 2.7};

  // schedule
  std::string method = "greedy";
  int n_samples = 1024;       // linear / local sampling
  double delta_a = 1e-4;      // greedy quantum (bz0 = 20 sweeps need <= 2e-4)
  double greedy_delta_t = 0.36;
  double p_c = 0.9999;
  double tau_times_bx = 0.036;  // per-bx macro-step time: delta_t = tau/bx

  // segments
  int m_plus_1 = 100;
  std::optional<double> segment_delta_t;  // default: schedule time / m_plus_1

  // evolve
  std::string evolve_mode = "exact";  // exact | trotter | relaxation
  double t1_seconds_h = 9.9;
  double t2_seconds_h = 0.6;
  double t1_seconds_c = 18.5;
  double t2_seconds_c = 0.2;
  int relax_substeps = 32;

  // metrology
  double delta = 0.03;
  std::string bz_hat_mode = "true-bz";  // true-bz | fixed
  double bz_hat_fixed = 1.0;
  double epsilon = 1e-5;
  double n_m = 1e20;
  double snr = 1e3;

  // bath; the scheme comparison sweeps noise_bz0 -> 1 at noise_bx
  double lambda = 0.4;
  std::vector<double> inv_beta_list{0.001, 0.01, 0.02, 0.5};
  double noise_bz0 = 3.0;
  double noise_bx = 0.015;
  double t_max = 12.0;
  int t_points = 120;
  int master_substeps = 64;

  void validate() const;  // throws std::invalid_argument with the field name
};

std::string config_to_json(const RunConfig& cfg);
RunConfig config_from_json(const std::string& text);

RunConfig default_config();

// Relaxation times converted from seconds into simulation units.
RelaxationParams relaxation_from_config(const RunConfig& cfg);

void cmd_schedule(const RunConfig& cfg);
void cmd_evolve(const RunConfig& cfg);
void cmd_qfi_sweep(const RunConfig& cfg);
ScalingFit cmd_scaling(const RunConfig& cfg);
void cmd_decompose(const RunConfig& cfg);
void cmd_noise_compare(const RunConfig& cfg);
void cmd_sensitivity(const RunConfig& cfg);

// Dispatch on cfg.experiment; returns the process exit code.
int run_command(const RunConfig& cfg);

}  // namespace aqmet
