#include "fujita/nonlinearity.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "fujita/kernels.hpp"
#include "fujita/quadrature.hpp"

namespace fujita::nonlin {

void validate(const NonlinearitySpec& spec) {
  std::vector<std::string> errors;
  if (!(spec.beta > 0.0)) errors.push_back("beta must be > 0");
  if (!(spec.c > 0.0)) errors.push_back("c must be > 0");
  if (!(spec.theta > 0.0)) errors.push_back("theta must be > 0");
  if (!errors.empty()) {
    std::ostringstream msg;
    msg << "invalid nonlinearity:";
    for (const auto& e : errors) msg << " [" << e << "]";
    throw std::invalid_argument(msg.str());
  }
}

double evaluate_G(const NonlinearitySpec& spec, double z) {
  if (z < 0.0) throw std::domain_error("evaluate_G: z must be non-negative");
  if (z == 0.0) return 0.0;
  const double lead = spec.c * std::pow(z, 1.0 + spec.beta);
  return spec.kind == Kind::PowerLaw ? lead : lead * (1.0 + z / spec.theta);
}

void evaluate_G_array(const NonlinearitySpec& spec, const double* u, double* g,
                      std::size_t n) {
  kernels::power_law(g, u, spec.c, 1.0 + spec.beta, n);
  if (spec.kind == Kind::ScaledPowerLaw) {
    const double inv_theta = 1.0 / spec.theta;
    for (std::size_t i = 0; i < n; ++i) g[i] *= 1.0 + u[i] * inv_theta;
  }
}

double ratio_G(const NonlinearitySpec& spec, double z) {
  if (z < 0.0) throw std::domain_error("ratio_G: z must be non-negative");
  if (z == 0.0) return 0.0;
  const double lead = spec.c * std::pow(z, spec.beta);
  return spec.kind == Kind::PowerLaw ? lead : lead * (1.0 + z / spec.theta);
}

double dG(const NonlinearitySpec& spec, double z) {
  if (z < 0.0) throw std::domain_error("dG: z must be non-negative");
  if (z == 0.0) return 0.0;
  const double b = spec.beta;
  if (spec.kind == Kind::PowerLaw) return spec.c * (1.0 + b) * std::pow(z, b);
  return spec.c * ((1.0 + b) * std::pow(z, b) * (1.0 + z / spec.theta) +
                   std::pow(z, 1.0 + b) / spec.theta);
}

double convexity_gap_grid(const NonlinearitySpec& spec, double eps, double M) {
  double min_ratio = std::numeric_limits<double>::infinity();
  const int n = 400;
  const double lo = std::log(M) - 24.0;  // reach into the z -> 0 regime
  const double hi = std::log(M);
  for (int i = 0; i <= n; ++i) {
    const double z = std::exp(lo + (hi - lo) * i / n);
    const double r = ratio_G(spec, (1.0 + eps) * z) / ratio_G(spec, z);
    min_ratio = std::min(min_ratio, r);
  }
  return (min_ratio - 1.0) * (1.0 - 1e-9);
}

double convexity_gap(const NonlinearitySpec& spec, double eps, double M) {
  if (!(eps > 0.0)) throw std::domain_error("convexity_gap: eps must be > 0");
  if (!(M > 0.0)) throw std::domain_error("convexity_gap: M must be > 0");
  validate(spec);
  // the ratio (G((1+eps)z)/(1+eps)z) / (G(z)/z) decreases to (1+eps)^beta as
  // z -> 0 for both kinds, so this is the largest uniformly valid gap
  (void)M;
  return std::pow(1.0 + eps, spec.beta) - 1.0;
}

Regime regime(int d, double alpha, const NonlinearitySpec& spec) {
  if (!(alpha > 0.0) || alpha > 2.0) throw std::domain_error("regime: alpha outside (0,2]");
  if (d < 1) throw std::domain_error("regime: d must be >= 1");
  validate(spec);
  return static_cast<double>(d) <= alpha / spec.beta ? Regime::BlowUpForAll
                                                     : Regime::GlobalRegime;
}

double p_crit(int d, double alpha) {
  if (!(static_cast<double>(d) > alpha)) throw std::domain_error("p_crit: requires d > alpha");
  return (d + alpha) / (d - alpha);
}

ConditionReport verify_conditions(const NonlinearitySpec& spec) {
  validate(spec);
  ConditionReport rep;

  // (G1): ratio G(z)/z^{1+beta} along z -> 0 settles on c
  const double r6 = evaluate_G(spec, 1e-6) / std::pow(1e-6, 1.0 + spec.beta);
  const double r8 = evaluate_G(spec, 1e-8) / std::pow(1e-8, 1.0 + spec.beta);
  rep.g1_limit = r8;
  rep.g1_ok = std::fabs(r6 - r8) <= 1e-4 * std::fabs(r8) &&
              std::fabs(r8 - spec.c) <= 1e-6 * spec.c;

  // (G2): doubling pieces of Int dz/G decay geometrically (ratio 2^{-beta});
  // converged when the extrapolated geometric tail is negligible
  auto inv_g = [&](double z) { return 1.0 / evaluate_G(spec, z); };
  double total = 0.0;
  double lo = spec.theta;
  double prev_piece = -1.0;
  for (int k = 0; k < 24; ++k) {
    const double hi = 2.0 * lo;
    const double piece = quad::integrate(inv_g, lo, hi, {1e-10, 0.0, 40});
    total += piece;
    if (prev_piece > 0.0 && k >= 4) {
      const double q = piece / prev_piece;
      if (q < 0.999) {
        rep.g2_ok = true;
        rep.g2_integral = total + piece * q / (1.0 - q);
        break;
      }
    }
    prev_piece = piece;
    lo = hi;
  }
  if (!rep.g2_ok) rep.g2_integral = total;

  // convexity: midpoint inequality on a 100-point grid
  rep.convex_ok = true;
  for (int i = 0; i < 100; ++i) {
    const double a = 1e-3 + i * 0.05;
    const double b = a + 2.0;
    const double mid = evaluate_G(spec, 0.5 * (a + b));
    const double chord = 0.5 * (evaluate_G(spec, a) + evaluate_G(spec, b));
    if (mid > chord * (1.0 + 1e-12)) rep.convex_ok = false;
  }
  return rep;
}

}  // namespace fujita::nonlin
