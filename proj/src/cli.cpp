#include "aqmet/cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <iostream>

#include "aqmet/constants.hpp"
#include "aqmet/io.hpp"
#include "json.hpp"

namespace aqmet {

namespace {

using nlohmann::json;

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

std::string out_path(const RunConfig& cfg, const std::string& suffix) {
  std::filesystem::create_directories(cfg.output_dir);
  return (std::filesystem::path(cfg.output_dir) /
          (cfg.experiment + "_" + cfg.label + suffix))
      .string();
}

GreedyParams greedy_params(const RunConfig& cfg, double delta_t) {
  GreedyParams p;
  p.delta_a = cfg.delta_a;
  p.delta_t = delta_t;
  p.p_c = cfg.p_c;
  return p;
}

Schedule make_schedule(const RunConfig& cfg, const FieldConfig& field) {
  switch (schedule_method_from_string(cfg.method)) {
    case ScheduleMethod::linear:
      return linear_schedule(cfg.n_samples,
                             cfg.segment_delta_t.value_or(cfg.greedy_delta_t) *
                                 cfg.m_plus_1);
    case ScheduleMethod::local:
      return local_schedule(field, cfg.n_samples);
    case ScheduleMethod::greedy:
      return greedy_schedule(field, greedy_params(cfg, cfg.greedy_delta_t));
  }
  throw std::invalid_argument("schedule.method is unknown");
}

SegmentPlan make_plan(const RunConfig& cfg, const Schedule& sch,
                      const FieldConfig& field) {
  double dt = cfg.segment_delta_t.value_or(sch.total_time / cfg.m_plus_1);
  return segment_plan(sch, field, cfg.m_plus_1, dt);
}

double bz_hat_for(const RunConfig& cfg, double bz) {
  return cfg.bz_hat_mode == "fixed" ? cfg.bz_hat_fixed : bz;
}

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

LineFit least_squares(const std::vector<double>& x,
                      const std::vector<double>& y) {
  const size_t n = x.size();
  if (n < 2) throw std::invalid_argument("degenerate fit: need >= 2 points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (size_t i = 0; i < n; ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  double denom = n * sxx - sx * sx;
  if (std::abs(denom) < 1e-30) {
    throw std::invalid_argument("degenerate fit: x values coincide");
  }
  LineFit fit;
  fit.slope = (n * sxy - sx * sy) / denom;
  fit.intercept = (sy - fit.slope * sx) / n;
  double ss_res = 0, ss_tot = 0, mean = sy / n;
  for (size_t i = 0; i < n; ++i) {
    double pred = fit.slope * x[i] + fit.intercept;
    ss_res += (y[i] - pred) * (y[i] - pred);
    ss_tot += (y[i] - mean) * (y[i] - mean);
  }
  fit.r_squared = ss_tot > 0 ? 1.0 - ss_res / ss_tot : 1.0;
  return fit;
}

}  // namespace

void RunConfig::validate() const {
  static const std::vector<std::string> experiments{
      "schedule", "evolve",        "qfi-sweep",  "scaling",
      "decompose", "noise-compare", "sensitivity"};
  require(std::find(experiments.begin(), experiments.end(), experiment) !=
              experiments.end(),
          "experiment must be one of schedule|evolve|qfi-sweep|scaling|"
          "decompose|noise-compare|sensitivity");
  require(!label.empty() &&
              label.find_first_of("/\\ \t") == std::string::npos,
          "label must be a non-empty slug without separators");
  require(bx > 0.0, "model.bx must be > 0");
  require(std::isfinite(bz0) && std::isfinite(bzf),
          "model.bz0 and model.bzf must be finite");
  for (double b : bx_list) require(b > 0.0, "model.bx_list entries must be > 0");
  require(method == "linear" || method == "local" || method == "greedy",
          "schedule.method must be linear|local|greedy");
  require(n_samples >= 16, "schedule.n_samples must be >= 16");
  require(delta_a > 0.0 && delta_a < 0.5,
          "schedule.delta_a must be in (0, 0.5)");
  require(greedy_delta_t > 0.0, "schedule.delta_t must be > 0");
  require(p_c > 0.0 && p_c < 1.0, "schedule.p_c must be in (0, 1)");
  require(tau_times_bx > 0.0, "schedule.tau_times_bx must be > 0");
  require(m_plus_1 >= 2, "segments.m_plus_1 must be >= 2");
  if (segment_delta_t) {
    require(*segment_delta_t > 0.0, "segments.delta_t must be > 0");
  }
  require(evolve_mode == "exact" || evolve_mode == "trotter" ||
              evolve_mode == "relaxation",
          "evolve.mode must be exact|trotter|relaxation");
  require(t1_seconds_h > 0 && t2_seconds_h > 0 && t1_seconds_c > 0 &&
              t2_seconds_c > 0,
          "evolve relaxation times must be > 0");
  require(relax_substeps >= 1, "evolve.substeps must be >= 1");
  require(delta > 0.0, "metrology.delta must be > 0");
  require(bz_hat_mode == "true-bz" || bz_hat_mode == "fixed",
          "metrology.bz_hat_mode must be true-bz|fixed");
  require(epsilon > 0 && n_m > 0 && snr > 0,
          "metrology.epsilon, n_m and snr must be > 0");
  require(lambda >= 0.0, "bath.lambda must be >= 0");
  require(!inv_beta_list.empty(), "bath.inv_beta_list must not be empty");
  for (double ib : inv_beta_list) {
    require(ib > 0.0, "bath.inv_beta_list entries must be > 0");
  }
  require(noise_bx > 0.0, "bath.bx must be > 0");
  require(noise_bz0 > 1.0, "bath.bz0 must be > 1 so the sweep crosses the anticrossing");
  require(t_max > 0.0, "bath.t_max must be > 0");
  require(t_points >= 2, "bath.t_points must be >= 2");
  require(master_substeps >= 8, "bath.substeps must be >= 8");
  if (experiment == "qfi-sweep") {
    require(!bz_grid.empty(), "model.bz_grid must not be empty");
    require(!bx_list.empty(), "model.bx_list must not be empty");
    for (double b : bz_grid) {
      require(b - delta > 0.0,
              "model.bz_grid entries must stay > 0 after the delta shift");
    }
  }
  if (experiment == "scaling") {
    require(bx_list.size() >= 4, "model.bx_list needs >= 4 entries");
  }
  if (experiment == "sensitivity") {
    require(!bz_grid.empty(), "model.bz_grid must not be empty");
  }
}

std::string config_to_json(const RunConfig& cfg) {
  json doc;
  doc["experiment"] = cfg.experiment;
  doc["label"] = cfg.label;
  doc["output_dir"] = cfg.output_dir;
  doc["model"] = {{"bz0", cfg.bz0},
                  {"bzf", cfg.bzf},
                  {"bx", cfg.bx},
                  {"bx_list", cfg.bx_list},
                  {"bz_grid", cfg.bz_grid}};
  doc["schedule"] = {{"method", cfg.method},
                     {"n_samples", cfg.n_samples},
                     {"delta_a", cfg.delta_a},
                     {"delta_t", cfg.greedy_delta_t},
                     {"p_c", cfg.p_c},
                     {"tau_times_bx", cfg.tau_times_bx}};
  doc["segments"] = {{"m_plus_1", cfg.m_plus_1}};
  if (cfg.segment_delta_t) doc["segments"]["delta_t"] = *cfg.segment_delta_t;
  doc["evolve"] = {{"mode", cfg.evolve_mode},
                   {"t1_seconds_h", cfg.t1_seconds_h},
                   {"t2_seconds_h", cfg.t2_seconds_h},
                   {"t1_seconds_c", cfg.t1_seconds_c},
                   {"t2_seconds_c", cfg.t2_seconds_c},
                   {"substeps", cfg.relax_substeps}};
  doc["metrology"] = {{"delta", cfg.delta},
                      {"bz_hat_mode", cfg.bz_hat_mode},
                      {"bz_hat", cfg.bz_hat_fixed},
                      {"epsilon", cfg.epsilon},
                      {"n_m", cfg.n_m},
                      {"snr", cfg.snr}};
  doc["bath"] = {{"lambda", cfg.lambda},
                 {"inv_beta_list", cfg.inv_beta_list},
                 {"bz0", cfg.noise_bz0},
                 {"bx", cfg.noise_bx},
                 {"t_max", cfg.t_max},
                 {"t_points", cfg.t_points},
                 {"substeps", cfg.master_substeps}};
  return doc.dump(2) + "\n";
}

RunConfig config_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("config is not valid JSON: ") +
                                e.what());
  }
  RunConfig cfg;
  try {
    doc.at("experiment").get_to(cfg.experiment);
    if (doc.contains("label")) doc.at("label").get_to(cfg.label);
    if (doc.contains("output_dir")) doc.at("output_dir").get_to(cfg.output_dir);
    if (doc.contains("model")) {
      const auto& m = doc.at("model");
      if (m.contains("bz0")) m.at("bz0").get_to(cfg.bz0);
      if (m.contains("bzf")) m.at("bzf").get_to(cfg.bzf);
      if (m.contains("bx")) m.at("bx").get_to(cfg.bx);
      if (m.contains("bx_list")) m.at("bx_list").get_to(cfg.bx_list);
      if (m.contains("bz_grid")) m.at("bz_grid").get_to(cfg.bz_grid);
    }
    if (doc.contains("schedule")) {
      const auto& s = doc.at("schedule");
      if (s.contains("method")) s.at("method").get_to(cfg.method);
      if (s.contains("n_samples")) s.at("n_samples").get_to(cfg.n_samples);
      if (s.contains("delta_a")) s.at("delta_a").get_to(cfg.delta_a);
      if (s.contains("delta_t")) s.at("delta_t").get_to(cfg.greedy_delta_t);
      if (s.contains("p_c")) s.at("p_c").get_to(cfg.p_c);
      if (s.contains("tau_times_bx"))
        s.at("tau_times_bx").get_to(cfg.tau_times_bx);
    }
    if (doc.contains("segments")) {
      const auto& s = doc.at("segments");
      if (s.contains("m_plus_1")) s.at("m_plus_1").get_to(cfg.m_plus_1);
      if (s.contains("delta_t")) cfg.segment_delta_t = s.at("delta_t").get<double>();
    }
    if (doc.contains("evolve")) {
      const auto& e = doc.at("evolve");
      if (e.contains("mode")) e.at("mode").get_to(cfg.evolve_mode);
      if (e.contains("t1_seconds_h")) e.at("t1_seconds_h").get_to(cfg.t1_seconds_h);
      if (e.contains("t2_seconds_h")) e.at("t2_seconds_h").get_to(cfg.t2_seconds_h);
      if (e.contains("t1_seconds_c")) e.at("t1_seconds_c").get_to(cfg.t1_seconds_c);
      if (e.contains("t2_seconds_c")) e.at("t2_seconds_c").get_to(cfg.t2_seconds_c);
      if (e.contains("substeps")) e.at("substeps").get_to(cfg.relax_substeps);
    }
    if (doc.contains("metrology")) {
      const auto& m = doc.at("metrology");
      if (m.contains("delta")) m.at("delta").get_to(cfg.delta);
      if (m.contains("bz_hat_mode")) m.at("bz_hat_mode").get_to(cfg.bz_hat_mode);
      if (m.contains("bz_hat")) m.at("bz_hat").get_to(cfg.bz_hat_fixed);
      if (m.contains("epsilon")) m.at("epsilon").get_to(cfg.epsilon);
      if (m.contains("n_m")) m.at("n_m").get_to(cfg.n_m);
      if (m.contains("snr")) m.at("snr").get_to(cfg.snr);
    }
    if (doc.contains("bath")) {
      const auto& b = doc.at("bath");
      if (b.contains("lambda")) b.at("lambda").get_to(cfg.lambda);
      if (b.contains("inv_beta_list")) b.at("inv_beta_list").get_to(cfg.inv_beta_list);
      if (b.contains("bz0")) b.at("bz0").get_to(cfg.noise_bz0);
      if (b.contains("bx")) b.at("bx").get_to(cfg.noise_bx);
      if (b.contains("t_max")) b.at("t_max").get_to(cfg.t_max);
      if (b.contains("t_points")) b.at("t_points").get_to(cfg.t_points);
      if (b.contains("substeps")) b.at("substeps").get_to(cfg.master_substeps);
    }
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("config field error: ") + e.what());
  }
  cfg.validate();
  return cfg;
}

RunConfig default_config() { return RunConfig{}; }

RelaxationParams relaxation_from_config(const RunConfig& cfg) {
  RelaxationParams relax;
  relax.t1 = {seconds_to_sim(cfg.t1_seconds_h), seconds_to_sim(cfg.t1_seconds_c)};
  relax.t2 = {seconds_to_sim(cfg.t2_seconds_h), seconds_to_sim(cfg.t2_seconds_c)};
  return relax;
}

void cmd_schedule(const RunConfig& cfg) {
  FieldConfig field{cfg.bz0, cfg.bzf, cfg.bx};
  Schedule sch = make_schedule(cfg, field);
  write_text_file(out_path(cfg, ".csv"), schedule_to_csv(sch));
  write_text_file(out_path(cfg, "_plan.csv"),
                  plan_to_csv(make_plan(cfg, sch, field)));
  std::cout << "schedule " << cfg.method << ": " << sch.s.size()
            << " samples, total_time " << format_number(sch.total_time)
            << "\n";
}

void cmd_evolve(const RunConfig& cfg) {
  FieldConfig field{cfg.bz0, cfg.bzf, cfg.bx};
  Schedule sch = make_schedule(cfg, field);
  SegmentPlan plan = make_plan(cfg, sch, field);
  Vector ground =
      herm_eig(build_perturbed(plan.bz_list[0], plan.bx)).vectors.col(0);
  EvolutionTrace trace;
  if (cfg.evolve_mode == "exact") {
    trace = run_exact(plan, ground);
  } else if (cfg.evolve_mode == "trotter") {
    trace = run_trotter(plan, ground);
  } else {
    trace = run_with_relaxation(plan, projector(ground),
                                relaxation_from_config(cfg),
                                cfg.relax_substeps);
  }
  write_text_file(out_path(cfg, ".csv"), trace_to_csv(trace));
  write_text_file(out_path(cfg, "_final.json"),
                  state_to_json(trace.final_state));
  std::cout << "evolve " << cfg.evolve_mode << ": average fidelity "
            << format_number(trace.average_fidelity) << ", final fidelity "
            << format_number(trace.steps.back().ground_fidelity) << "\n";
}

namespace {

struct SweepPoint {
  double bz = 0, bx = 0, total_time = 0;
  QfiEstimate est;
};

// Greedy preparation at the sweep endpoint plus the three-point
// reconstruction with the whole ramp offset by the probe shift.
SweepPoint sweep_point(const RunConfig& cfg, double bx, double bz) {
  FieldConfig field{cfg.bz0, bz, bx};
  Schedule sch =
      greedy_schedule(field, greedy_params(cfg, cfg.tau_times_bx / bx));
  SegmentPlan plan =
      segment_plan(sch, field, cfg.m_plus_1, sch.total_time / cfg.m_plus_1);
  MeasurementBasis basis = optimal_basis(bz_hat_for(cfg, bz), bx);
  auto p1 = [&](double b) {
    SegmentPlan shifted = plan;
    for (double& f : shifted.bz_list) f += b - bz;
    Vector ground =
        herm_eig(build_perturbed(shifted.bz_list[0], bx)).vectors.col(0);
    Matrix rho = run_exact(shifted, ground).final_state;
    return measure_probs(rho, basis)[0];
  };
  SweepPoint point;
  point.bz = bz;
  point.bx = bx;
  point.total_time = plan.total_time();
  point.est = reconstruct_qfi(p1, bz, cfg.delta);
  return point;
}

}  // namespace

void cmd_qfi_sweep(const RunConfig& cfg) {
  std::vector<double> bxs = cfg.bx_list;
  std::vector<double> bzs = cfg.bz_grid;
  std::sort(bxs.begin(), bxs.end());
  std::sort(bzs.begin(), bzs.end());
  CsvTable t;
  t.header = {"bz", "bx", "p1_minus", "p1_center", "p1_plus",
              "fq_reconstructed", "fq_analytic", "delta1", "fq_per_time",
              "total_time"};
  for (double bx : bxs) {
    for (double bz : bzs) {
      SweepPoint p = sweep_point(cfg, bx, bz);
      t.rows.push_back({format_number(bz), format_number(bx),
                        format_number(p.est.p1_minus),
                        format_number(p.est.p1_center),
                        format_number(p.est.p1_plus),
                        format_number(p.est.value),
                        format_number(qfi_analytic(bz, bx)),
                        format_number(delta1(bz, bx, cfg.delta)),
                        format_number(p.est.value / p.total_time),
                        format_number(p.total_time)});
    }
  }
  write_text_file(out_path(cfg, ".csv"), t.to_string());
  std::cout << "qfi-sweep: " << t.rows.size() << " points\n";
}

ScalingFit cmd_scaling(const RunConfig& cfg) {
  std::vector<double> bxs = cfg.bx_list;
  std::sort(bxs.begin(), bxs.end());
  ScalingFit fit;
  CsvTable t;
  t.header = {"bx", "total_time", "fq_reconstructed", "fq_analytic",
              "sqrt_fq"};
  std::vector<double> log_t, log_f;
  for (double bx : bxs) {
    RunConfig point_cfg = cfg;
    point_cfg.bzf = 1.0;
    SweepPoint p = sweep_point(point_cfg, bx, 1.0);
    double sqrt_fq = std::sqrt(p.est.value);
    fit.bx_list.push_back(bx);
    fit.times.push_back(p.total_time);
    fit.sqrt_fq.push_back(sqrt_fq);
    log_t.push_back(std::log(p.total_time));
    log_f.push_back(std::log(p.est.value));
    t.rows.push_back({format_number(bx), format_number(p.total_time),
                      format_number(p.est.value),
                      format_number(qfi_analytic(1.0, bx)),
                      format_number(sqrt_fq)});
  }
  LineFit line = least_squares(fit.times, fit.sqrt_fq);
  fit.slope = line.slope;
  fit.intercept = line.intercept;
  fit.r_squared = line.r_squared;
  fit.loglog_slope = least_squares(log_t, log_f).slope;
  write_text_file(out_path(cfg, ".csv"), t.to_string());
  json doc;
  doc["slope"] = fit.slope;
  doc["intercept"] = fit.intercept;
  doc["r_squared"] = fit.r_squared;
  doc["loglog_slope"] = fit.loglog_slope;
  write_text_file(out_path(cfg, "_fit.json"), doc.dump(2) + "\n");
  std::cout << "scaling: slope " << format_number(fit.slope) << ", R^2 "
            << format_number(fit.r_squared) << ", log-log slope "
            << format_number(fit.loglog_slope) << "\n";
  return fit;
}

void cmd_decompose(const RunConfig& cfg) {
  double bz_hat = cfg.bz_hat_mode == "fixed" ? cfg.bz_hat_fixed : cfg.bzf;
  Matrix u = build_uo(bz_hat, cfg.bx);
  GateSequence seq = decompose_uo(u);
  double dist =
      (gate_sequence_product(seq) - u).cwiseAbs().maxCoeff();
  auto [phi1, phi2] = circuit_phase_params(bz_hat, cfg.bx);
  std::ostringstream out;
  out << "# gate sequence for the measurement-basis rotation at bz_hat = "
      << format_number(bz_hat) << ", bx = " << format_number(cfg.bx) << "\n"
      << "# recomposition_distance " << format_number(dist) << "\n"
      << "# circuit_phases phi1 " << format_number(phi1) << " phi2 "
      << format_number(phi2) << "\n"
      << gate_sequence_to_text(seq);
  write_text_file(out_path(cfg, ".txt"), out.str());
  std::cout << "decompose: " << seq.ops.size()
            << " gates, recomposition distance " << format_number(dist)
            << "\n";
}

void cmd_noise_compare(const RunConfig& cfg) {
  // The comparison sweeps its own geometry and stops at the critical point,
  // where the adiabatic probe has its full Fisher information.
  FieldConfig field{cfg.noise_bz0, 1.0, cfg.noise_bx};
  std::vector<BathSpec> baths;
  std::vector<double> betas = cfg.inv_beta_list;
  std::sort(betas.begin(), betas.end());
  for (double inv_beta : betas) {
    baths.push_back({cfg.lambda, 1.0 / inv_beta});
  }
  std::vector<double> grid;
  for (int i = 1; i <= cfg.t_points; ++i) {
    grid.push_back(cfg.t_max * i / cfg.t_points);
  }
  SchemeComparison cmp = compare_schemes(
      field, baths, grid, greedy_params(cfg, cfg.tau_times_bx / field.bx),
      cfg.m_plus_1, cfg.master_substeps);
  CsvTable t;
  t.header = {"t", "qfi", "scheme", "lambda", "inv_beta"};
  for (size_t b = 0; b < baths.size(); ++b) {
    const SchemeCurve& curve = cmp.conventional[b];
    for (size_t i = 0; i < curve.times.size(); ++i) {
      t.rows.push_back({format_number(curve.times[i]),
                        format_number(curve.qfi_values[i]), curve.scheme,
                        format_number(curve.lambda),
                        format_number(curve.inv_beta)});
    }
    t.rows.push_back({format_number(cmp.total_time),
                      format_number(cmp.adiabatic_qfi[b]), "adiabatic",
                      format_number(cfg.lambda), format_number(betas[b])});
    t.rows.push_back({format_number(cmp.total_time),
                      format_number(cmp.envelope[b]), "conventional-envelope",
                      format_number(cfg.lambda), format_number(betas[b])});
  }
  write_text_file(out_path(cfg, ".csv"), t.to_string());
  std::cout << "noise-compare: adiabatic T " << format_number(cmp.total_time)
            << ", " << baths.size() << " baths\n";
}

void cmd_sensitivity(const RunConfig& cfg) {
  BandwidthResult band = response_and_bandwidth(cfg.bx);
  std::vector<double> bzs = cfg.bz_grid;
  std::sort(bzs.begin(), bzs.end());
  CsvTable t;
  t.header = {"bz", "bz_hat", "bx", "fq_analytic", "quantum_variance",
              "classical_variance", "total_variance", "bandwidth",
              "tesla_c", "tesla_h"};
  for (double bz : bzs) {
    double bz_hat = bz_hat_for(cfg, bz);
    SensitivityReport rep =
        sensitivity(bz, bz_hat, cfg.bx, cfg.epsilon, cfg.n_m, cfg.snr);
    t.rows.push_back({format_number(bz), format_number(bz_hat),
                      format_number(cfg.bx),
                      format_number(qfi_analytic(bz, cfg.bx)),
                      format_number(rep.quantum_variance),
                      format_number(rep.classical_variance),
                      format_number(rep.total_variance),
                      format_number(band.bandwidth),
                      format_number(to_tesla(bz, kCouplingHz, kGammaC)),
                      format_number(to_tesla(bz, kCouplingHz, kGammaH))});
  }
  write_text_file(out_path(cfg, ".csv"), t.to_string());
  std::cout << "sensitivity: bandwidth " << format_number(band.bandwidth)
            << ", critical-point field " << std::flush
            << format_number(to_tesla(1.0, kCouplingHz, kGammaC))
            << " T on 13C, "
            << format_number(to_tesla(1.0, kCouplingHz, kGammaH))
            << " T on 1H\n";
}

int run_command(const RunConfig& cfg) {
  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  }
  try {
    if (cfg.experiment == "schedule") {
      cmd_schedule(cfg);
    } else if (cfg.experiment == "evolve") {
      cmd_evolve(cfg);
    } else if (cfg.experiment == "qfi-sweep") {
      cmd_qfi_sweep(cfg);
    } else if (cfg.experiment == "scaling") {
      cmd_scaling(cfg);
    } else if (cfg.experiment == "decompose") {
      cmd_decompose(cfg);
    } else if (cfg.experiment == "noise-compare") {
      cmd_noise_compare(cfg);
    } else {
      cmd_sensitivity(cfg);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}

}  // namespace aqmet
