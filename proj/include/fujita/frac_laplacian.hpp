#pragma once

// Second, independent route to Delta_alpha = -(-Delta)^{alpha/2}: the
// principal-value singular integral
//   c_{alpha,d} PV Int (f(x+y) - f(x)) / |y|^{d+alpha} dy
// evaluated through the symmetrized difference, for pointwise checks against
// the spectral multiplier. Two variants: the free-space operator on decaying
// handles, and the periodized-kernel operator that matches the torus
// multiplier exactly (the nonlocal kernel sees periodic images, so the two
// differ by O(L^{-d-alpha}) on a box of side L). The normalization
// c_{alpha,d} is calibrated once per (alpha, d) against the spectral
// operator on a Gaussian over a box large enough that image terms sit below
// the calibration precision, then cross-checked against the classical
// closed form.

#include <functional>

#include "fujita/grid.hpp"

namespace fujita::frac {

struct PvOptions {
  double r0 = 1e-2;      // inner Taylor radius
  double rel_tol = 1e-9;
};

// Free-space Delta_alpha f (x) for smooth, bounded, decaying f; alpha in
// (0, 2]. alpha = 2 falls back to a high-order finite-difference Laplacian.
double apply_pointwise_pv(const std::function<double(const grid::Point&)>& f, double alpha,
                          int d, const grid::Point& x, const PvOptions& opt = {});

// Torus Delta_alpha at x for an L-periodic function of one variable: the
// same singular integral against the periodized kernel sum_k |z+kL|^{-d-alpha}.
// Agrees with apply_spectral on sampled fields to quadrature accuracy.
double apply_pointwise_pv_periodic(const std::function<double(double)>& f, double alpha,
                                   double L, double x, const PvOptions& opt = {});

// Calibrated normalization constant (cached per (alpha, d)).
double pv_normalization(double alpha, int d);

// Classical constant 2^alpha Gamma((d+alpha)/2) / (pi^{d/2} |Gamma(-alpha/2)|),
// the corroborating closed form.
double pv_constant_closed_form(double alpha, int d);

// Box side such that the steady-state tail |x|^{-(d-alpha)} beyond L/4
// contributes less than `budget` (relative to the peak) to the Riesz integral
// at the origin.
double recommended_box_side(int d, double alpha, double budget = 1e-3);

}  // namespace fujita::frac
