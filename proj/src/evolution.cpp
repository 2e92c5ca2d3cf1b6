#include "fujita/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "fujita/kernels.hpp"

namespace fujita::evolve {

namespace {

double adapted_dt(const Controls& c, const nonlin::NonlinearitySpec& g, double sup) {
  if (c.fixed_dt > 0.0) return c.fixed_dt;
  const double gp = nonlin::dG(g, sup);
  double dt = gp > 0.0 ? c.dt_safety / gp : c.dt_cap;
  return std::clamp(dt, c.dt_min, c.dt_cap);
}

// least-squares slope/intercept of y against t
void linear_fit(const std::vector<double>& t, const std::vector<double>& y, double& a,
                double& b) {
  const std::size_t n = t.size();
  double st = 0, sy = 0, stt = 0, sty = 0;
  for (std::size_t i = 0; i < n; ++i) {
    st += t[i];
    sy += y[i];
    stt += t[i] * t[i];
    sty += t[i] * y[i];
  }
  const double det = n * stt - st * st;
  b = det != 0.0 ? (n * sty - st * sy) / det : 0.0;
  a = (sy - b * st) / n;
}

double fit_blow_time(const std::vector<std::pair<double, double>>& trace, double beta,
                     double t_end) {
  // fit sup^{-beta} ~ a + b t over the final window; root a + b t = 0
  std::vector<double> ts, ys;
  const std::size_t n = trace.size();
  const std::size_t lo = n > 50 ? n - 50 : 0;
  for (std::size_t i = lo; i < n; ++i) {
    ts.push_back(trace[i].first);
    ys.push_back(std::pow(trace[i].second, -beta));
  }
  if (ts.size() < 2) return t_end;
  double a, b;
  linear_fit(ts, ys, a, b);
  if (!(b < 0.0)) return t_end;
  return -a / b;
}

double fit_decay_rate(const std::vector<std::pair<double, double>>& trace, double t_lo) {
  std::vector<double> ts, ys;
  for (const auto& [t, s] : trace)
    if (t >= t_lo && s > 0.0) {
      ts.push_back(t);
      ys.push_back(std::log(s));
    }
  if (ts.size() < 2) return 0.0;
  double a, b;
  linear_fit(ts, ys, a, b);
  (void)a;
  return b;
}

bool monotone_tail(const std::vector<std::pair<double, double>>& trace, double window_from) {
  bool any = false;
  double prev = -1.0;
  for (const auto& [t, s] : trace) {
    if (t < window_from) continue;
    if (prev >= 0.0 && s > prev * (1.0 + 1e-9) + 1e-300) return false;
    prev = s;
    any = true;
  }
  return any;
}

}  // namespace

void validate(const ProblemSpec& spec) {
  grid::check_shape(spec.d, spec.n);
  if (!(spec.alpha > 0.0) || spec.alpha > 2.0)
    throw std::invalid_argument("ProblemSpec: alpha outside (0,2]");
  if (!(spec.L > 0.0)) throw std::invalid_argument("ProblemSpec: L must be > 0");
  nonlin::validate(spec.reaction);
}

bool step(grid::GridField& u, const ProblemSpec& spec, double dt) {
  if (!(dt > 0.0)) throw std::domain_error("step: dt must be > 0");
  grid::semigroup_inplace(u, spec.alpha, dt);
  thread_local std::vector<double> g;
  g.resize(u.values.size());
  nonlin::evaluate_G_array(spec.reaction, u.values.data(), g.data(), u.values.size());
  kernels::axpy_clamp(u.values.data(), g.data(), dt, u.values.size());
  return std::isfinite(u.sup_abs());
}

double SolutionTrace::eval(double t, const grid::Point& x) const {
  if (times.empty()) throw std::runtime_error("SolutionTrace: empty");
  if (t < times.front() - 1e-12 || t > times.back() + 1e-12)
    throw std::out_of_range("SolutionTrace: query time outside the recorded range");
  if (t <= times.front()) return fields.front().interpolate(x);
  if (t >= times.back()) return fields.back().interpolate(x);
  const auto it = std::upper_bound(times.begin(), times.end(), t);
  const std::size_t hi = it - times.begin();
  const std::size_t lo = hi - 1;
  const double w = (t - times[lo]) / (times[hi] - times[lo]);
  return (1.0 - w) * fields[lo].interpolate(x) + w * fields[hi].interpolate(x);
}

namespace {

struct TraceRecorder {
  SolutionTrace* trace;
  int capacity;
  int stride = 1;
  int since_last = 0;

  void push(double t, const grid::GridField& u) {
    if (trace == nullptr) return;
    if (++since_last < stride) return;
    since_last = 0;
    trace->times.push_back(t);
    trace->fields.push_back(u);
    if (static_cast<int>(trace->times.size()) >= capacity) thin();
  }

  void thin() {  // keep every other snapshot, double the stride
    auto& ts = trace->times;
    auto& fs = trace->fields;
    std::size_t w = 0;
    for (std::size_t i = 0; i < ts.size(); i += 2, ++w) {
      ts[w] = ts[i];
      fs[w] = std::move(fs[i]);
    }
    ts.resize(w);
    fs.resize(w);
    stride *= 2;
  }
};

}  // namespace

SimOutcome run(const ProblemSpec& spec, const grid::GridField& phi, double T_max,
               const Controls& c, SolutionTrace* trace) {
  validate(spec);
  if (phi.min_value() < 0.0) throw std::invalid_argument("run: phi must be non-negative");

  SimOutcome out;
  const double sup0 = phi.sup_abs();
  out.delta_ext_used = c.delta_ext_rel * sup0;
  out.supnorm_trace.push_back({0.0, sup0});

  if (trace != nullptr) {
    trace->spec = spec;
    trace->initial = phi;
    trace->times.clear();
    trace->fields.clear();
    trace->times.push_back(0.0);
    trace->fields.push_back(phi);
  }

  if (sup0 == 0.0) {
    out.tag = OutcomeTag::Extinct;
    out.detail = "zero initial datum";
    return out;
  }

  grid::GridField u = phi;
  TraceRecorder rec{trace, std::max(8, c.trace_capacity), 1, 0};

  const double dt0 = adapted_dt(c, spec.reaction, sup0);
  double t = 0.0;
  double sup = sup0;
  std::int64_t steps = 0;

  auto try_extinct = [&](double now) -> bool {
    const double window_from = now * (1.0 - c.mono_window);
    // absolute threshold
    if (sup < out.delta_ext_used && monotone_tail(out.supnorm_trace, window_from)) {
      out.detail = "absolute threshold";
      return true;
    }
    // linear-floor certificate: the solution has genuinely decayed and sits on
    // the decaying semigroup envelope of the initial datum
    if (sup <= c.drop_factor * sup0 && monotone_tail(out.supnorm_trace, window_from)) {
      const double floor = grid::apply_semigroup(phi, spec.alpha, now).sup_abs();
      if (sup <= c.lin_floor_factor * floor) {
        out.detail = "semigroup floor certificate";
        out.delta_ext_used = std::max(out.delta_ext_used, c.lin_floor_factor * floor);
        return true;
      }
    }
    return false;
  };

  while (t < T_max && steps < c.max_steps) {
    const double dt = std::min(adapted_dt(c, spec.reaction, sup), T_max - t + 1e-300);
    const bool finite = step(u, spec, dt);
    t += dt;
    ++steps;
    sup = u.sup_abs();
    out.supnorm_trace.push_back({t, sup});
    rec.push(t, u);

    if (!finite || sup > c.blow_sup) {
      const double dt_now = adapted_dt(c, spec.reaction, sup);
      if (!finite || dt_now <= dt0 / c.collapse_factor) {
        out.tag = OutcomeTag::BlewUp;
        out.t_blow_estimate = fit_blow_time(out.supnorm_trace, spec.reaction.beta, t);
        out.t_decided = t;
        out.final_sup = sup;
        out.detail = finite ? "threshold with step collapse" : "overflow";
        return out;
      }
    }
    if (steps % c.check_every == 0 && sup < sup0 && try_extinct(t)) {
      out.tag = OutcomeTag::Extinct;
      out.t_decided = t;
      out.final_sup = sup;
      out.decay_rate_estimate = fit_decay_rate(out.supnorm_trace, t * (1.0 - c.mono_window));
      return out;
    }
  }

  out.final_sup = sup;
  out.t_decided = t;
  if (sup < sup0 && try_extinct(t)) {
    out.tag = OutcomeTag::Extinct;
    out.decay_rate_estimate = fit_decay_rate(out.supnorm_trace, t * (1.0 - c.mono_window));
    return out;
  }
  out.tag = OutcomeTag::Undecided;
  out.detail = steps >= c.max_steps ? "step budget exhausted" : "no certificate by T_max";
  return out;
}

DichotomyResult dichotomy_experiment(const ProblemSpec& spec, const grid::GridField& base,
                                     double eps, double T_max, const Controls& c) {
  validate(spec);
  if (!(eps > 0.0) || eps >= 1.0)
    throw std::invalid_argument("dichotomy_experiment: eps must lie in (0,1)");

  grid::GridField lo = base, hi = base;
  for (auto& v : lo.values) v *= (1.0 - eps);
  for (auto& v : hi.values) v *= (1.0 + eps);

  DichotomyResult result;

  // Synchronized phase: both branches advance with the shared dt so the
  // order-preservation of the scheme is measurable pointwise in time.
  {
    double t = 0.0;
    double defect = -std::numeric_limits<double>::infinity();
    grid::GridField ulo = lo, uhi = hi;
    double sup_lo = ulo.sup_abs(), sup_hi = uhi.sup_abs();
    const double dt0_hi = adapted_dt(c, spec.reaction, sup_hi);
    std::int64_t steps = 0;
    while (t < T_max && steps < c.max_steps) {
      const double dt = std::min({adapted_dt(c, spec.reaction, sup_lo),
                                  adapted_dt(c, spec.reaction, sup_hi), T_max - t + 1e-300});
      const bool f1 = step(ulo, spec, dt);
      const bool f2 = step(uhi, spec, dt);
      t += dt;
      ++steps;
      sup_lo = ulo.sup_abs();
      sup_hi = uhi.sup_abs();
      if (f1 && f2)
        defect = std::max(defect,
                          kernels::max_diff(ulo.values.data(), uhi.values.data(),
                                            ulo.values.size()));
      if (!f2 || (sup_hi > c.blow_sup &&
                  adapted_dt(c, spec.reaction, sup_hi) <= dt0_hi / c.collapse_factor))
        break;  // upper branch has blown up; ordering was tracked to the end
    }
    result.ordering_defect = std::max(defect, 0.0);
  }

  // Independent classified runs.
  result.lower = run(spec, lo, T_max, c);
  result.upper = run(spec, hi, T_max, c);

  // Semigroup-decay diagnostic on the lower branch: t * G(P_t phi(0)).
  const grid::Point origin{0.0, 0.0, 0.0};
  const double horizon = std::min(T_max, result.lower.t_decided > 0.0
                                             ? result.lower.t_decided
                                             : T_max);
  for (int k = 1; k <= 24; ++k) {
    const double tk = horizon * k / 24.0;
    const double v = grid::apply_semigroup(lo, spec.alpha, tk).interpolate(origin);
    result.lower_semigroup_decay.push_back({tk, tk * nonlin::evaluate_G(spec.reaction, v)});
  }
  return result;
}

}  // namespace fujita::evolve
