// Acceptance suite: one criterion per function, one PASS/FAIL line each,
// tolerances pinned in code. Run all criteria (no arguments) or a single one
// with --criterion N. Exit status 0 iff every executed criterion passed.

#include <chrono>
#include <cmath>
#include <cstring>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "fujita/ball.hpp"
#include "fujita/evolution.hpp"
#include "fujita/feynman_kac.hpp"
#include "fujita/frac_laplacian.hpp"
#include "fujita/grid.hpp"
#include "fujita/nonlinearity.hpp"
#include "fujita/quadrature.hpp"
#include "fujita/rng.hpp"
#include "fujita/special_functions.hpp"
#include "fujita/stable_process.hpp"
#include "fujita/steady_states.hpp"
#include "support/stats.hpp"

using namespace fujita;
constexpr double kPi = std::numbers::pi;

namespace {

struct Checker {
  bool ok = true;
  std::ostringstream log;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      log << "      FAILED: " << what << "\n";
    }
  }
  void require_le(double value, double bound, const std::string& what) {
    std::ostringstream msg;
    msg << what << " (" << value << " <= " << bound << ")";
    require(value <= bound, msg.str());
  }
  void require_ge(double value, double bound, const std::string& what) {
    std::ostringstream msg;
    msg << what << " (" << value << " >= " << bound << ")";
    require(value >= bound, msg.str());
  }
};

// 1. Steady-state verification: Riesz residual of the explicit family.
void criterion_1(Checker& c) {
  steady::SteadyStateParams p{{0, 0, 0}, 1.0, 1, 0.5};
  std::vector<double> radii;
  for (double r = 0.0; r <= 5.0 + 1e-12; r += 0.1) radii.push_back(r);
  auto u = [&](double r) { return steady::eval_family_radial(p, r); };
  const auto rep = steady::riesz_residual(u, 1, 0.5, 3.0, radii);
  c.require_le(rep.max_normalized, 1e-3, "max normalized residual over radii 0:0.1:5");

  auto bad = [&](double r) { return 1.1 * steady::eval_family_radial(p, r); };
  const auto rep_bad = steady::riesz_residual(bad, 1, 0.5, 3.0, {0.0});
  c.require_ge(std::fabs(rep_bad.residuals[0]), 0.01, "perturbed input is discriminated");
}

// 2. alpha = 2 reduction to the classical solution family.
void criterion_2(Checker& c) {
  Rng rng(2024, 0);
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    const int d = 3 + static_cast<int>(rng.uniform(0.0, 3.0));
    const double A = std::exp(rng.uniform(-1.5, 1.5));
    const double r = std::exp(rng.uniform(-2.0, 2.0));
    steady::SteadyStateParams p{{0, 0, 0}, A, d, 2.0};
    const double dd = d;
    const double classical =
        A * std::pow(dd * (dd - 2.0), 0.5 * (dd - 2.0)) /
        std::pow(dd * (dd - 2.0) + std::pow(std::pow(A, 2.0 / (dd - 2.0)) * r, 2.0),
                 0.5 * (dd - 2.0));
    worst = std::max(worst,
                     std::fabs(steady::eval_family_radial(p, r) - classical) / classical);
  }
  c.require_le(worst, 1e-12, "relative error over 100 random (d, A, r) tuples");
}

// 3. Fourier-side identity via the Macdonald-function chain.
void criterion_3(Checker& c) {
  for (const auto& [d, alpha] : std::vector<std::pair<int, double>>{{1, 0.5}, {3, 1.0}}) {
    std::vector<double> radii;
    for (int k = 1; k <= 10; ++k) radii.push_back(0.08 * k * k);
    const auto pairs = steady::fourier_side_check(1.0, d, alpha, radii);
    double worst = 0.0;
    for (const auto& pr : pairs)
      worst = std::max(worst, std::fabs(pr.lhs - pr.rhs) / std::fabs(pr.lhs));
    std::ostringstream what;
    what << "lhs/rhs agreement at 10 radii, d=" << d << " alpha=" << alpha;
    c.require_le(worst, 1e-6, what.str());
  }
}

// 4. Kelvin algebra: involution, family closure, singular fixed point.
void criterion_4(Checker& c) {
  const int d = 1;
  const double alpha = 0.5;
  steady::SteadyStateParams p{{0, 0, 0}, 1.7, d, alpha};
  auto u = [&](const steady::Point& x) { return steady::eval_family(p, x); };
  auto ku = [&](const steady::Point& y) { return steady::kelvin(u, {0, 0, 0}, d, alpha, y); };
  const double a_scale = p.a_scale();
  steady::SteadyStateParams img{{0, 0, 0}, p.A * std::pow(a_scale, -(d - alpha)), d, alpha};
  auto us = [&](const steady::Point& y) { return steady::eval_singular(d, alpha, y); };

  Rng rng(4, 0);
  double w_inv = 0.0, w_closure = 0.0, w_fixed = 0.0;
  for (int k = 0; k < 100; ++k) {
    const double xv = std::exp(rng.uniform(-2.5, 2.5)) * (rng.uniform01() < 0.5 ? -1 : 1);
    const steady::Point x{xv, 0, 0};
    w_inv = std::max(w_inv,
                     std::fabs(steady::kelvin(ku, {0, 0, 0}, d, alpha, x) - u(x)) / u(x));
    w_closure =
        std::max(w_closure, std::fabs(ku(x) - steady::eval_family(img, x)) / u(x));
    const double s = us(x);
    w_fixed =
        std::max(w_fixed, std::fabs(steady::kelvin(us, {0, 0, 0}, d, alpha, x) - s) / s);
  }
  c.require_le(w_inv, 1e-10, "Kelvin involution at 100 points");
  c.require_le(w_closure, 1e-10, "family closure under Kelvin at 100 points");
  c.require_le(w_fixed, 1e-10, "singular solution is a Kelvin fixed point");
}

// 5. Spectral vs principal-value operator on a Gaussian bump.
void criterion_5(Checker& c) {
  auto gauss = [](const grid::Point& x) { return std::exp(-x[0] * x[0]); };
  auto f = grid::sample(1, 40.0, 4096, gauss);
  for (double alpha : {0.5, 1.0, 1.5}) {
    auto spectral = grid::apply_spectral(f, alpha);
    double sup = 0.0;
    for (double v : spectral.values) sup = std::max(sup, std::fabs(v));
    double worst = 0.0;
    for (double xv = -5.0; xv <= 5.0 + 1e-9; xv += 0.5) {
      const int i = static_cast<int>(std::lround((xv + 20.0) / f.spacing()));
      const double pv = frac::apply_pointwise_pv(gauss, alpha, 1, {f.coord(i), 0, 0});
      worst = std::max(worst, std::fabs(pv - spectral.values[i]) / sup);
    }
    std::ostringstream what;
    what << "spectral/PV agreement on |x| <= 5 at alpha=" << alpha;
    c.require_le(worst, 1e-3, what.str());
  }
}

// 6. Transition densities: closed forms by inversion, sampler KS tests.
void criterion_6(Checker& c) {
  double worst = 0.0;
  for (double r : {0.0, 0.4, 1.0, 2.2, 4.0}) {
    const double cauchy = stable::transition_density_radial(1.0, 1, 1.0, r);
    worst = std::max(worst, std::fabs(stable::transition_density_radial(1.0 + 1e-9, 1, 1.0, r) -
                                      cauchy) /
                                cauchy);
    const double heat = stable::transition_density_radial(2.0, 1, 1.0, r);
    worst = std::max(worst, std::fabs(stable::transition_density_radial(2.0 - 1e-9, 1, 1.0, r) -
                                      heat) /
                                heat);
  }
  c.require_le(worst, 1e-6, "Fourier inversion reproduces alpha = 1, 2 closed forms");

  const int n = 100000;
  Rng rng(6, 0);
  std::vector<double> cauchy_draws(n), normal_draws(n);
  for (int i = 0; i < n; ++i) {
    cauchy_draws[i] = stable::sample_increment(1.0, 1.0, 1, rng)[0];
    normal_draws[i] = stable::sample_increment(2.0, 1.0, 1, rng)[0];
  }
  const double ks_cauchy = teststats::ks_statistic(
      cauchy_draws, [](double x) { return 0.5 + std::atan(x) / kPi; });
  c.require_le(ks_cauchy, teststats::ks_critical_1pct(n), "alpha=1 sampler KS at 1%");
  const double ks_normal = teststats::ks_statistic(normal_draws, [](double x) {
    return 0.5 * std::erfc(-x / 2.0);
  });
  c.require_le(ks_normal, teststats::ks_critical_1pct(n), "alpha=2 sampler KS at 1%");
}

// 7. Dichotomy around the explicit steady state.
void criterion_7(Checker& c) {
  evolve::ProblemSpec spec;
  spec.d = 1;
  spec.alpha = 0.5;
  spec.reaction = {nonlin::Kind::PowerLaw, 2.0, 1.0, 1.0};
  spec.L = 512.0;
  spec.n = 32768;
  steady::SteadyStateParams p{{0, 0, 0}, 1.0, 1, 0.5};
  auto base = grid::sample(1, spec.L, spec.n, [&](const grid::Point& x) {
    return steady::eval_family(p, {x[0], 0, 0});
  });
  const auto res = evolve::dichotomy_experiment(spec, base, 0.5, 50.0, evolve::Controls{});
  c.require(res.lower.tag == evolve::OutcomeTag::Extinct,
            "(1-eps) branch classified Extinct (got " + res.lower.detail + ")");
  c.require(res.upper.tag == evolve::OutcomeTag::BlewUp,
            "(1+eps) branch classified BlewUp (got " + res.upper.detail + ")");
  c.require(res.lower.t_decided <= 50.0, "lower decision within T_max");
  c.require(res.upper.t_decided <= 50.0, "upper decision within T_max");
  c.require_le(res.ordering_defect, 1e-9 * base.sup_abs(),
               "monotone ordering along synchronized runs");
}

// 8. Fujita regime: every positive datum blows up when d <= alpha/beta.
void criterion_8(Checker& c) {
  evolve::ProblemSpec spec;
  spec.d = 1;
  spec.alpha = 0.5;
  spec.reaction = {nonlin::Kind::PowerLaw, 0.25, 1.0, 1.0};
  spec.L = 80.0;
  spec.n = 4096;
  c.require(nonlin::regime(spec.d, spec.alpha, spec.reaction) ==
                nonlin::Regime::BlowUpForAll,
            "(d, alpha, beta) = (1, 0.5, 0.25) sits in the blow-up-for-all regime");
  auto phi = grid::sample(1, spec.L, spec.n, [](const grid::Point& x) {
    return 0.05 * std::exp(-x[0] * x[0]);
  });
  const auto out = evolve::run(spec, phi, 200.0, evolve::Controls{});
  c.require(out.tag == evolve::OutcomeTag::BlewUp,
            "amplitude-0.05 bump classified BlewUp (got " + out.detail + ")");
  c.require(out.t_decided < 200.0, "blow-up before T_max = 200");
}

// 9. Feynman-Kac consistency on a decaying run.
void criterion_9(Checker& c) {
  evolve::ProblemSpec spec;
  spec.d = 1;
  spec.alpha = 0.5;
  spec.reaction = {nonlin::Kind::PowerLaw, 2.0, 1.0, 1.0};
  spec.L = 512.0;
  spec.n = 32768;
  steady::SteadyStateParams p{{0, 0, 0}, 1.0, 1, 0.5};
  auto phi = grid::sample(1, spec.L, spec.n, [&](const grid::Point& x) {
    return 0.5 * steady::eval_family(p, {x[0], 0, 0});
  });
  evolve::SolutionTrace trace;
  const auto out = evolve::run(spec, phi, 30.0, evolve::Controls{}, &trace);
  c.require(out.tag == evolve::OutcomeTag::Extinct,
            "trace run classified Extinct (got " + out.detail + ")");

  const double grid_value = trace.eval(0.5, {0, 0, 0});
  const auto coarse = fk::fk_estimate(trace, 0.5, {0, 0, 0}, 100000, 64, 9);
  const auto fine = fk::fk_estimate(trace, 0.5, {0, 0, 0}, 100000, 128, 10);
  const double bias = std::fabs(fine.mean - coarse.mean);
  const double z = std::fabs(fine.mean - grid_value) /
                   std::sqrt(fine.stderr_mean * fine.stderr_mean + bias * bias);
  c.require_le(z, 3.0, "FK estimate vs grid solution z-score (step-halving bias included)");

  fk::FkOptions zero;
  zero.potential_scale = 0.0;
  const auto control = fk::fk_estimate(trace, 0.5, {0, 0, 0}, 100000, 64, 11, zero);
  const double semi = grid::apply_semigroup(phi, spec.alpha, 0.5).interpolate({0, 0, 0});
  const double z0 = std::fabs(control.mean - semi) / control.stderr_mean;
  c.require_le(z0, 3.0, "zero-potential control reproduces the semigroup");
}

// 10. Ball module: kernels, steady state, symmetry, boundary exponent.
void criterion_10(Checker& c) {
  // Poisson normalization at 5 interior points (d = 1, alpha = 1)
  const auto params = ball::make_ball_params(1.0, 1);
  double worst_norm = 0.0;
  for (double xv : {0.0, 0.2, 0.4, 0.5, 0.7}) {
    auto f = [&](double y) { return ball::poisson_kernel(params, {xv, 0, 0}, {y, 0, 0}); };
    quad::Options qopt{1e-11, 0.0, 46};
    double total = quad::integrate_tanh_sinh(f, 1.0, 2.0, qopt) +
                   quad::integrate_tanh_sinh([&](double y) { return f(-y); }, 1.0, 2.0, qopt);
    auto tail = [&](double u) {
      const double y = 2.0 * std::exp(u);
      return (f(y) + f(-y)) * y;
    };
    total += quad::integrate(tail, 0.0, 34.0, qopt);
    worst_norm = std::max(worst_norm, std::fabs(total - 1.0));
  }
  c.require_le(worst_norm, 1e-6, "Poisson normalization at 5 interior points");

  // Green / exit-time identity within 3 SE (independent MC run)
  auto g0 = [&](double y) { return ball::green_function(params, {0, 0, 0}, {y, 0, 0}); };
  const double row = quad::integrate_tanh_sinh([&](double y) { return g0(y) + g0(-y); }, 0.0,
                                               1.0, {1e-9, 0.0, 44});
  const auto tau = ball::exit_time_mc_extrapolated(1.0, 1, {0, 0, 0}, 60000, 5e-4, 1010);
  c.require_le(std::fabs(row - tau.mean) / tau.se, 3.0, "Green/exit-time identity z-score");

  // steady states: symmetry defect and boundary exponents
  ball::BallNonlinearity F{0.1, 0.1};
  const auto sol1 = ball::solve_ball_steady(F, 1.0, 1, 192);
  c.require_le(sol1.symmetry_defect, 1e-6, "symmetry defect of the d=1 solution");
  c.require_le(std::fabs(sol1.boundary_exponent - 0.5), 0.1,
               "boundary exponent alpha/2 at alpha=1");
  const auto sol15 = ball::solve_ball_steady(F, 1.5, 1, 192);
  c.require_le(std::fabs(sol15.boundary_exponent - 0.75), 0.1,
               "boundary exponent alpha/2 at alpha=1.5");
  const auto sol2 = ball::solve_ball_steady(F, 1.0, 2, 64);
  c.require_le(sol2.symmetry_defect, 1e-6, "symmetry defect of the d=2 solution");

  // moving-planes diagnostic
  steady::SteadyStateParams sp{{0, 0, 0}, 1.0, 2, 1.0};
  auto radial_u = [&](const ball::Point& x) {
    const double q = x[0] * x[0] + x[1] * x[1];
    if (q >= 1.0) return 0.0;
    return steady::eval_family_radial(sp, std::sqrt(q));
  };
  const auto rad_rep = ball::symmetry_diagnostic(radial_u, 2, {1, 0, 0}, 160);
  c.require_le(std::fabs(rad_rep.lambda_sup), 2.0 / 160 + 1e-12,
               "radial input reaches lambda_sup = 0 within grid tolerance");
  auto bump = [](const ball::Point& x) {
    const double q = (x[0] - 0.3) * (x[0] - 0.3) + x[1] * x[1];
    return std::max(0.0, 1.0 - 4.0 * q);
  };
  const auto bump_rep = ball::symmetry_diagnostic(bump, 2, {-1, 0, 0}, 160);
  c.require(bump_rep.lambda_sup < 0.0 && !bump_rep.violations.empty(),
            "shifted bump is flagged with violations");
}

struct Criterion {
  int id;
  const char* title;
  double budget_seconds;
  std::function<void(Checker&)> fn;
};

const std::vector<Criterion> kCriteria = {
    {1, "steady-state Riesz residual", 60.0, criterion_1},
    {2, "alpha = 2 reduction to the classical family", 1.0, criterion_2},
    {3, "Fourier-side Macdonald identity", 30.0, criterion_3},
    {4, "Kelvin transform algebra", 1.0, criterion_4},
    {5, "spectral vs principal-value operator", 60.0, criterion_5},
    {6, "transition densities and sampler", 120.0, criterion_6},
    {7, "dichotomy around the steady state", 600.0, criterion_7},
    {8, "blow-up-for-all regime", 600.0, criterion_8},
    {9, "Feynman-Kac consistency", 300.0, criterion_9},
    {10, "ball kernels, symmetry, boundary exponent", 600.0, criterion_10},
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) only = std::atoi(argv[i + 1]);
  }

  bool all_ok = true;
  for (const auto& crit : kCriteria) {
    if (only != 0 && crit.id != only) continue;
    Checker c;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      crit.fn(c);
    } catch (const std::exception& e) {
      c.ok = false;
      c.log << "      EXCEPTION: " << e.what() << "\n";
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > crit.budget_seconds) {
      c.ok = false;
      c.log << "      FAILED: runtime " << secs << " s exceeds budget " << crit.budget_seconds
            << " s\n";
    }
    std::cout << (c.ok ? "[PASS]" : "[FAIL]") << " criterion " << crit.id << ": " << crit.title
              << " (" << secs << " s)\n"
              << c.log.str();
    all_ok = all_ok && c.ok;
  }
  return all_ok ? 0 : 1;
}
