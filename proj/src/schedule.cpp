#include "aqmet/schedule.hpp"

#include <cmath>
#include <sstream>

namespace aqmet {

std::string to_string(ScheduleMethod m) {
  switch (m) {
    case ScheduleMethod::linear: return "linear";
    case ScheduleMethod::local: return "local";
    case ScheduleMethod::greedy: return "greedy";
  }
  return "?";
}

ScheduleMethod schedule_method_from_string(const std::string& s) {
  if (s == "linear") return ScheduleMethod::linear;
  if (s == "local") return ScheduleMethod::local;
  if (s == "greedy") return ScheduleMethod::greedy;
  throw std::invalid_argument("unknown schedule method: " + s);
}

void Schedule::validate() const {
  if (s.size() != a.size() || s.size() < 2) {
    throw std::invalid_argument("schedule needs matching s/a samples");
  }
  if (s.front() != 0.0 || s.back() != 1.0 || a.front() != 0.0 ||
      a.back() != 1.0) {
    throw std::invalid_argument("schedule endpoints must be (0,0) and (1,1)");
  }
  for (size_t i = 1; i < s.size(); ++i) {
    if (!(s[i] > s[i - 1])) {
      throw std::invalid_argument("schedule s must be strictly increasing");
    }
    if (a[i] < a[i - 1] - 1e-15) {
      throw std::invalid_argument("schedule a must be nondecreasing");
    }
  }
}

void GreedyParams::validate() const {
  if (!(delta_a > 0.0 && delta_a < 0.5)) {
    throw std::invalid_argument("greedy delta_a must be in (0, 0.5)");
  }
  if (!(delta_t > 0.0)) {
    throw std::invalid_argument("greedy delta_t must be > 0");
  }
  if (!(p_c > 0.0 && p_c < 1.0)) {
    throw std::invalid_argument("greedy p_c must be in (0, 1)");
  }
}

Schedule linear_schedule(int n, double total_time) {
  if (n < 2) throw std::invalid_argument("linear schedule needs n >= 2");
  Schedule sch;
  sch.method = ScheduleMethod::linear;
  sch.total_time = total_time;
  sch.s.resize(n);
  sch.a.resize(n);
  for (int i = 0; i < n; ++i) {
    double x = static_cast<double>(i) / (n - 1);
    sch.s[i] = x;
    sch.a[i] = x;
  }
  sch.s.back() = 1.0;
  sch.a.back() = 1.0;
  return sch;
}

namespace {

// Interpolated detuning u(A) = 1 - bz(A); the gap is 2 sqrt(2 bx^2 + u^2).
double detuning(const FieldConfig& cfg, double a) {
  return 1.0 - cfg.bz0 + (cfg.bz0 - cfg.bzf) * a;
}

}  // namespace

double local_c(const FieldConfig& cfg) {
  cfg.validate();
  double k = cfg.bz0 - cfg.bzf;
  if (k == 0.0) {
    throw std::invalid_argument("degenerate sweep: bz0 equals bzf");
  }
  double r = std::sqrt(2.0) * cfg.bx;
  double u0 = 1.0 - cfg.bz0;
  double u1 = 1.0 - cfg.bzf;
  // (1/4k) * integral du / (2 bx^2 + u^2)
  return (std::atan(u1 / r) - std::atan(u0 / r)) / (4.0 * r * k);
}

Schedule local_schedule(const FieldConfig& cfg, int n) {
  cfg.validate();
  if (n < 16) throw std::invalid_argument("local schedule needs n >= 16");
  const double c = local_c(cfg);
  auto rhs = [&](double a) {
    double g = gap(std::min(a, 1.0), cfg);
    return c * g * g;
  };
  Schedule sch;
  sch.method = ScheduleMethod::local;
  sch.total_time = c;
  sch.s.reserve(n + 1);
  sch.a.reserve(n + 1);
  double a = 0.0;
  double h = 1.0 / n;
  sch.s.push_back(0.0);
  sch.a.push_back(0.0);
  for (int i = 0; i < n; ++i) {
    double k1 = rhs(a);
    double k2 = rhs(a + 0.5 * h * k1);
    double k3 = rhs(a + 0.5 * h * k2);
    double k4 = rhs(a + h * k3);
    a += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    if (!std::isfinite(a)) {
      throw std::runtime_error("local schedule ODE step produced non-finite A");
    }
    sch.s.push_back(i + 1 == n ? 1.0 : (i + 1) * h);
    sch.a.push_back(std::min(a, 1.0));
  }
  if (std::abs(a - 1.0) > 1e-6) {
    std::ostringstream msg;
    msg << "local schedule missed A(1)=1 by " << a - 1.0;
    throw std::runtime_error(msg.str());
  }
  sch.a.back() = 1.0;
  return sch;
}

namespace {

// Overlap |<g(a')| e^{-i H(a') dt} |g(a)>| between the evolved ground state
// of H(a) and the instantaneous ground state at a'.
double step_overlap(const FieldConfig& cfg, const Vector& ground_from,
                    double a_to, double dt) {
  Matrix h = build_adiabatic(a_to, cfg);
  Vector evolved = expm_unitary(h, dt) * ground_from;
  EigenSystem sys = herm_eig(h);
  Complex ov = sys.vectors.col(0).adjoint() * evolved;
  return std::abs(ov);
}

}  // namespace

Schedule greedy_schedule(const FieldConfig& cfg, const GreedyParams& params) {
  cfg.validate();
  params.validate();

  Schedule sch;
  sch.method = ScheduleMethod::greedy;
  std::vector<double> a_points{0.0};
  double a = 0.0;
  Vector ground = herm_eig(build_adiabatic(0.0, cfg)).vectors.col(0);

  const long max_steps = 4 * static_cast<long>(1.0 / params.delta_a) + 64;
  while (a < 1.0) {
    if (static_cast<long>(a_points.size()) > max_steps) {
      throw std::runtime_error("greedy schedule failed to terminate");
    }
    auto accept = [&](long n) {
      double a_try = std::min(a + n * params.delta_a, 1.0);
      return step_overlap(cfg, ground, a_try, params.delta_t) >= params.p_c;
    };
    // Jump straight to the end when the full remaining advance passes.
    long n_end = static_cast<long>(
        std::ceil((1.0 - a) / params.delta_a - 1e-12));
    if (accept(n_end)) {
      a = 1.0;
      a_points.push_back(a);
      break;
    }
    if (!accept(1)) {
      std::ostringstream msg;
      msg << "greedy schedule stalled at A = " << a
          << ": a single delta_a advance already drops below p_c";
      throw std::runtime_error(msg.str());
    }
    // Largest accepted n by doubling then bisection; overlap decreases with
    // the advance at these scales, so this matches the linear scan.
    long lo = 1, hi = 2;
    while (hi < n_end && accept(hi)) {
      lo = hi;
      hi *= 2;
    }
    hi = std::min(hi, n_end);
    while (hi - lo > 1) {
      long mid = lo + (hi - lo) / 2;
      if (accept(mid)) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    a = std::min(a + lo * params.delta_a, 1.0);
    a_points.push_back(a);
    Matrix h = build_adiabatic(a, cfg);
    ground = herm_eig(h).vectors.col(0);
  }

  const size_t n = a_points.size();
  sch.s.resize(n);
  sch.a = std::move(a_points);
  for (size_t i = 0; i < n; ++i) {
    sch.s[i] = static_cast<double>(i) / (n - 1);
  }
  sch.s.back() = 1.0;
  sch.a.back() = 1.0;
  sch.total_time = static_cast<double>(n - 1) * params.delta_t;
  return sch;
}

double time_bound_linear(const FieldConfig& cfg) {
  cfg.validate();
  double dmin = 2.0 * std::sqrt(2.0) * cfg.bx;
  return 2.0 * std::abs(cfg.bz0 - 1.0) / (dmin * dmin);
}

double inv_gap_integral(const FieldConfig& cfg) {
  cfg.validate();
  double k = cfg.bz0 - cfg.bzf;
  if (k == 0.0) {
    throw std::invalid_argument("degenerate sweep: bz0 equals bzf");
  }
  double r = std::sqrt(2.0) * cfg.bx;
  double u0 = 1.0 - cfg.bz0;
  double u1 = 1.0 - cfg.bzf;
  return (std::asinh(u1 / r) - std::asinh(u0 / r)) / (2.0 * k);
}

double time_bound_local(const FieldConfig& cfg) {
  cfg.validate();
  double c = local_c(cfg);
  double b = cfg.bz0 - 1.0;
  double d0 = gap(0.0, cfg);
  double d1 = gap(1.0, cfg);
  return 4.0 * b * c + 4.0 * b * c * std::log(d0 / d1) +
         4.0 * b * b * c * inv_gap_integral(cfg);
}

double schedule_value(const Schedule& sch, double s) {
  if (s <= 0.0) return sch.a.front();
  if (s >= 1.0) return sch.a.back();
  auto it = std::upper_bound(sch.s.begin(), sch.s.end(), s);
  size_t j = it - sch.s.begin();
  double w = (s - sch.s[j - 1]) / (sch.s[j] - sch.s[j - 1]);
  return sch.a[j - 1] + w * (sch.a[j] - sch.a[j - 1]);
}

SegmentPlan segment_plan(const Schedule& sch, const FieldConfig& cfg,
                         int m_plus_1, double delta_t) {
  sch.validate();
  cfg.validate();
  if (m_plus_1 < 2) throw std::invalid_argument("need at least 2 segments");
  if (!(delta_t > 0.0)) throw std::invalid_argument("delta_t must be > 0");
  SegmentPlan plan;
  plan.delta_t = delta_t;
  plan.bx = cfg.bx;
  plan.bz_list.resize(m_plus_1);
  const int m = m_plus_1 - 1;
  for (int i = 0; i <= m; ++i) {
    double a = schedule_value(sch, static_cast<double>(i) / m);
    plan.bz_list[i] = (1.0 - a) * cfg.bz0 + a * cfg.bzf;
  }
  plan.bz_list.front() = cfg.bz0;
  plan.bz_list.back() = cfg.bzf;
  return plan;
}

}  // namespace aqmet
