#pragma once

// Mild-solution time integration of du/dt = Delta_alpha u + G(u) on the
// periodic grid: exact semigroup factor + explicit reaction step with
// positivity clamp, adaptive dt tied to G'(sup u), and classification of a
// run as blow-up / extinction / undecided.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fujita/grid.hpp"
#include "fujita/nonlinearity.hpp"

namespace fujita::evolve {

struct ProblemSpec {
  int d = 1;
  double alpha = 0.5;
  nonlin::NonlinearitySpec reaction;
  double L = 40.0;
  int n = 1024;
};

void validate(const ProblemSpec& spec);

struct Controls {
  double dt_safety = 0.1;        // dt = dt_safety / G'(sup u)
  double dt_cap = 0.1;
  double dt_min = 1e-14;
  double blow_sup = 1e6;         // sup-norm threshold for blow-up
  double collapse_factor = 1e3;  // required dt contraction at blow-up
  double delta_ext_rel = 1e-3;   // absolute extinction: sup < rel * sup(phi)
  double lin_floor_factor = 2.0; // floor extinction: sup <= factor * sup(P_t phi)
  double drop_factor = 0.1;      // floor extinction also needs sup <= drop * sup(phi)
  double mono_window = 0.2;      // trailing fraction that must be non-increasing
  double fixed_dt = 0.0;         // > 0 disables adaptivity (order tests)
  std::int64_t max_steps = 4000000;
  int check_every = 16;          // steps between extinction checks
  int trace_capacity = 512;      // snapshot budget for the solution trace
};

enum class OutcomeTag { BlewUp, Extinct, Undecided };

struct SimOutcome {
  OutcomeTag tag = OutcomeTag::Undecided;
  double t_blow_estimate = 0.0;            // BlewUp: fitted singularity time
  double decay_rate_estimate = 0.0;        // Extinct: fitted d ln sup / dt
  double t_decided = 0.0;                  // time at which the label fired
  double final_sup = 0.0;
  double delta_ext_used = 0.0;             // effective extinction threshold
  std::vector<std::pair<double, double>> supnorm_trace;  // (t, sup)
  std::string detail;
};

// Snapshots of the solution for the Feynman-Kac cross-check.
struct SolutionTrace {
  ProblemSpec spec;
  grid::GridField initial;
  std::vector<double> times;
  std::vector<grid::GridField> fields;

  // space-time interpolated solution value (periodic in space, linear in time)
  double eval(double t, const grid::Point& x) const;
};

// One splitting step: u <- P_dt u, then u <- max(0, u + dt G(u)).
// Returns false when non-finite values appeared (overflow feeds blow-up
// detection, not failure).
bool step(grid::GridField& u, const ProblemSpec& spec, double dt);

SimOutcome run(const ProblemSpec& spec, const grid::GridField& phi, double T_max,
               const Controls& controls, SolutionTrace* trace = nullptr);

struct DichotomyResult {
  SimOutcome lower;   // (1-eps) branch
  SimOutcome upper;   // (1+eps) branch
  double ordering_defect = 0.0;  // max over synchronized steps of max(u_lo - u_hi)
  // t * G(P_t phi_lower(0)) samples: the semigroup-decay diagnostic
  std::vector<std::pair<double, double>> lower_semigroup_decay;
};

DichotomyResult dichotomy_experiment(const ProblemSpec& spec, const grid::GridField& base,
                                     double eps, double T_max, const Controls& controls);

}  // namespace fujita::evolve
