#pragma once

// The constants and kernels everything else consumes: Gamma, the Macdonald
// function K_nu evaluated by adaptive quadrature of its integral
// representation, the B_w Bessel-potential kernel, and the Riesz potential
// constant A(d, alpha) of the Green kernel of the fractional Laplacian.

#include <stdexcept>

namespace fujita::special {

// Gamma(x) for x > 0, Lanczos approximation; relative error < 1e-13 on
// [1e-3, 50]. Throws std::domain_error for x <= 0.
double gamma_fn(double x);

// log Gamma(x), x > 0.
double log_gamma(double x);

// Macdonald function K_nu(z), z > 0, by adaptive quadrature of
//   K_nu(z) = 1/2 (z/2)^nu Int_0^inf r^{-nu-1} exp(-r - z^2/4r) dr
// after the substitution r = (z/2) e^t, which turns both endpoint
// singularities into double-exponential decay:
//   K_nu(z) = Int_0^inf exp(-z cosh t) cosh(nu t) dt.
// Relative error <= 1e-10 for z in [1e-2, 50], |nu| <= 5.
double bessel_k(double nu, double z);

// B_w kernel at radius r via the Macdonald closed form
//   B_w(r) = 2^{(d-w)/2+1} / (Gamma(w/2) (4 pi)^{d/2}) r^{(w-d)/2} K_{(d-w)/2}(r).
double b_kernel(double w, int d, double r);

// B_w at radius r by direct quadrature of the defining integral
//   B_w(r) = 1/(Gamma(w/2) (4 pi)^{d/2}) Int_0^inf s^{(w-d)/2-1} e^{-s - r^2/4s} ds;
// the independent oracle for b_kernel.
double b_kernel_by_integral(double w, int d, double r);

struct RieszConstant {
  int d;
  double alpha;
  double value;
};

// A(d, alpha) = Gamma((d-alpha)/2) / (Gamma(alpha/2) 2^alpha pi^{d/2}),
// defined for 0 < alpha <= 2, d > alpha.
RieszConstant riesz_constant(int d, double alpha);

}  // namespace fujita::special
