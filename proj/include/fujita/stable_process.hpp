#pragma once

// Symmetric alpha-stable process with characteristic function
// E exp(i theta . X_h) = exp(-h ||theta||^alpha), matching the Fourier
// multiplier -(2 pi ||xi||)^alpha of the generator. One dimension uses the
// Chambers-Mallows-Stuck transform; d >= 2 subordinates a Gaussian by a
// positive alpha/2-stable time change.

#include <array>
#include <cstdint>
#include <vector>

#include "fujita/rng.hpp"

namespace fujita::stable {

using Point = std::array<double, 3>;  // first d entries are meaningful

struct StablePath {
  double alpha = 2.0;
  int d = 1;
  std::vector<double> times;
  std::vector<Point> positions;
  std::uint64_t seed = 0;
};

// One-sided stable subordinator value S with E exp(-lambda S) = exp(-lambda^a),
// 0 < a < 1 (Kanter's method).
double sample_subordinator(double a, Rng& rng);

// One increment over time h.
Point sample_increment(double alpha, double h, int d, Rng& rng);

// Path observed at the given times (times[0] == 0, strictly increasing),
// deterministic in the seed.
StablePath simulate_path(double alpha, int d, const Point& x0,
                         const std::vector<double>& times, std::uint64_t seed);

// Transition density p_t(x, y). Closed forms at alpha = 2 (heat kernel) and
// alpha = 1 (Cauchy); other alpha by Fourier inversion of exp(-t theta^alpha)
// reduced to a radial integral (d <= 3).
double transition_density(double alpha, int d, double t, const Point& x, const Point& y);

// Radial density value at distance r (helper shared with tests).
double transition_density_radial(double alpha, int d, double t, double r);

}  // namespace fujita::stable
