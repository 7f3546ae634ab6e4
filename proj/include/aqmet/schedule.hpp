#pragma once

#include <string>
#include <vector>

#include "aqmet/model.hpp"

// Adiabatic profiles A(s): the linear ramp, the gap-adaptive local passage
// dA/ds = c Delta^2(A), and the greedy fidelity-threshold path, plus the
// adiabatic-time bounds and the discretization into constant-field segments.

namespace aqmet {

enum class ScheduleMethod { linear, local, greedy };

std::string to_string(ScheduleMethod m);
ScheduleMethod schedule_method_from_string(const std::string& s);

struct Schedule {
  std::vector<double> s;  // strictly increasing, 0 .. 1
  std::vector<double> a;  // nondecreasing, a.front() = 0, a.back() = 1
  double total_time = 0.0;
  ScheduleMethod method = ScheduleMethod::linear;

  void validate() const;
};

struct GreedyParams {
  double delta_a = 1e-3;  // quantum of A per trial advance
  double delta_t = 0.36;  // evolution time per accepted macro step
  double p_c = 0.9999;    // overlap threshold (amplitude)

  void validate() const;
};

struct SegmentPlan {
  double delta_t = 0.0;
  std::vector<double> bz_list;  // one field per segment; size m_plus_1
  double bx = 0.0;

  int segments() const { return static_cast<int>(bz_list.size()); }
  double total_time() const { return delta_t * segments(); }
};

// a(s) = s sampled at n >= 2 points.
Schedule linear_schedule(int n, double total_time);

// Normalization c = integral_0^1 Delta^-2(A) dA, in closed form.
double local_c(const FieldConfig& cfg);

// Fixed-step RK4 solution of dA/ds = c Delta^2(A) on n >= 16 steps;
// total_time is set to c (callers rescale through the segment plan).
Schedule local_schedule(const FieldConfig& cfg, int n);

// The iterative path: from the instantaneous ground state, advance A by the
// largest multiple of delta_a whose post-evolution overlap with the new
// ground state stays >= p_c; clamp the final step to A = 1.
// total_time = (accepted macro steps) * delta_t.
Schedule greedy_schedule(const FieldConfig& cfg, const GreedyParams& params);

// 2 |bz0 - 1| / (2 sqrt2 bx)^2, the dominant linear-path requirement.
double time_bound_linear(const FieldConfig& cfg);

// 4(bz0-1)c [1 + log(Delta(0)/Delta(1))] + 4(bz0-1)^2 c inte Delta^-1 dA,
// with the integral in closed form.
double time_bound_local(const FieldConfig& cfg);

// integral_0^1 Delta^-1(A) dA in closed form (exposed for the bound tests).
double inv_gap_integral(const FieldConfig& cfg);

// Piecewise-linear interpolation of a(s).
double schedule_value(const Schedule& sch, double s);

// Fields bz[i] = (1 - a(i/M)) bz0 + a(i/M) bzf for i = 0..M, M+1 = m_plus_1.
SegmentPlan segment_plan(const Schedule& sch, const FieldConfig& cfg,
                         int m_plus_1, double delta_t);

}  // namespace aqmet
