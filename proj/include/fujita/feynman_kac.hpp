#pragma once

// Monte Carlo evaluation of the probabilistic solution representation
//   u(t,x) = E_x[ phi(X_t) exp Int_0^t V(t-s, X_s) ds ],  V(s,y) = G(u(s,y))/u(s,y),
// the forward form of the bridge identity (equivalent by symmetry of the
// process), used to cross-validate the deterministic solver.

#include <cstdint>

#include "fujita/evolution.hpp"

namespace fujita::fk {

struct FkEstimate {
  double mean = 0.0;
  double stderr_mean = 0.0;
  int n_paths = 0;
  int n_steps = 0;
};

struct FkOptions {
  // scales the potential: 1 is the representation itself, 0 the semigroup
  // control, (1+eps) the monotonicity probe
  double potential_scale = 1.0;
};

FkEstimate fk_estimate(const evolve::SolutionTrace& trace, double t, const grid::Point& x,
                       int n_paths, int n_steps, std::uint64_t seed,
                       const FkOptions& opt = {});

}  // namespace fujita::fk
