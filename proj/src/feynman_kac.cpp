#include "fujita/feynman_kac.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "fujita/parallel.hpp"
#include "fujita/stable_process.hpp"

namespace fujita::fk {

FkEstimate fk_estimate(const evolve::SolutionTrace& trace, double t, const grid::Point& x,
                       int n_paths, int n_steps, std::uint64_t seed, const FkOptions& opt) {
  if (trace.times.empty()) throw std::invalid_argument("fk_estimate: empty trace");
  if (!(t > 0.0) || t > trace.times.back() + 1e-12)
    throw std::out_of_range("fk_estimate: t outside the trace range");
  if (n_paths < 1 || n_steps < 1)
    throw std::invalid_argument("fk_estimate: n_paths and n_steps must be >= 1");

  const auto& spec = trace.spec;
  const double h = t / n_steps;
  const auto& g = spec.reaction;

  std::vector<double> path_values(n_paths);
  parallel_for(static_cast<std::size_t>(n_paths), [&](std::size_t i) {
    Rng rng(seed, i);
    grid::Point pos = x;
    double a_t = 0.0;
    // walk the midpoint times h/2, 3h/2, ...; each visit accumulates
    // h * V(t - s_mid, X_{s_mid}) with V = G(u)/u read from the trace
    double gap = 0.5 * h;
    for (int k = 0; k < n_steps; ++k) {
      const auto inc = stable::sample_increment(spec.alpha, gap, spec.d, rng);
      for (int j = 0; j < spec.d; ++j) pos[j] += inc[j];
      const double s_mid = (k + 0.5) * h;
      const double u_here = trace.eval(t - s_mid, pos);
      if (u_here < 0.0)
        throw std::invalid_argument("fk_estimate: negative solution value along a path");
      a_t += h * nonlin::ratio_G(g, u_here);
      gap = h;
    }
    // final half step to reach time t exactly
    const auto inc = stable::sample_increment(spec.alpha, 0.5 * h, spec.d, rng);
    for (int j = 0; j < spec.d; ++j) pos[j] += inc[j];
    path_values[i] = trace.initial.interpolate(pos) * std::exp(opt.potential_scale * a_t);
  });

  double sum = 0.0;
  for (double v : path_values) sum += v;
  const double mean = sum / n_paths;
  double ss = 0.0;
  for (double v : path_values) ss += (v - mean) * (v - mean);
  const double var = n_paths > 1 ? ss / (n_paths - 1) : 0.0;

  FkEstimate est;
  est.mean = mean;
  est.stderr_mean = std::sqrt(var / n_paths);
  est.n_paths = n_paths;
  est.n_steps = n_steps;
  return est;
}

}  // namespace fujita::fk
