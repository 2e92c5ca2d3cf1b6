#pragma once

// The reaction term G: parametric convex families with machine-checkable
// small-z power behavior (limit G(z)/z^{1+beta} = c) and convergent tail
// integral of 1/G, plus the convexity-gap bound and the blow-up-regime
// classifier in (d, alpha, beta).

#include <cstddef>
#include <string>
#include <vector>

namespace fujita::nonlin {

enum class Kind {
  PowerLaw,        // G(z) = c z^{1+beta}
  ScaledPowerLaw,  // G(z) = c z^{1+beta} (1 + z/theta): same small-z law,
                   // crossover to the steeper power above the scale theta
};

struct NonlinearitySpec {
  Kind kind = Kind::PowerLaw;
  double beta = 1.0;   // exponent offset, > 0
  double c = 1.0;      // prefactor = the (G1) limit, > 0
  double theta = 1.0;  // crossover scale / lower limit of the tail test, > 0
};

// Throws std::invalid_argument with a full list of violations.
void validate(const NonlinearitySpec& spec);

// G(z); z < 0 is a domain error.
double evaluate_G(const NonlinearitySpec& spec, double z);

// g[i] = G(u[i]) for non-negative arrays (SIMD-dispatched fast paths).
void evaluate_G_array(const NonlinearitySpec& spec, const double* u, double* g,
                      std::size_t n);

// G(z)/z with the continuous extension 0 at z = 0.
double ratio_G(const NonlinearitySpec& spec, double z);

// G'(z).
double dG(const NonlinearitySpec& spec, double z);

// The gap eps' > 0 with G((1+eps)z)/((1+eps)z) > (1+eps') G(z)/z on (0, M].
// For both supported kinds the ratio is minimized in the z -> 0 limit where
// it equals (1+eps)^beta, so the analytic gap is exact.
double convexity_gap(const NonlinearitySpec& spec, double eps, double M);

// Generic log-grid minimizer of the same ratio (safety factor 1 - 1e-9);
// cross-checks the closed form.
double convexity_gap_grid(const NonlinearitySpec& spec, double eps, double M);

enum class Regime { BlowUpForAll, GlobalRegime };

// d <= alpha/beta forces blow-up for every nontrivial datum.
Regime regime(int d, double alpha, const NonlinearitySpec& spec);

// critical exponent (d+alpha)/(d-alpha)
double p_crit(int d, double alpha);

struct ConditionReport {
  bool g1_ok = false;        // G(z)/z^{1+beta} -> c as z -> 0+
  double g1_limit = 0.0;     // observed limit
  bool g2_ok = false;        // Int_theta^inf dz/G(z) < inf
  double g2_integral = 0.0;  // doubling partial sums plus geometric tail
  bool convex_ok = false;    // midpoint inequality on a 100-point grid
};

// Numerical verification of the standing assumptions for a spec.
ConditionReport verify_conditions(const NonlinearitySpec& spec);

}  // namespace fujita::nonlin
