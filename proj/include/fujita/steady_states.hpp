#pragma once

// Explicit stationary solutions of Delta_alpha u + u^p = 0 at the critical
// exponent p = (d+alpha)/(d-alpha): the two-parameter radial family, the
// singular power solution, the Kelvin transform, and two independent
// verification routes (real-space Riesz residual, Fourier-side Macdonald
// identity).

#include <array>
#include <functional>
#include <vector>

namespace fujita::steady {

using Point = std::array<double, 3>;

struct SteadyStateParams {
  Point center{0.0, 0.0, 0.0};
  double A = 1.0;  // peak amplitude
  int d = 1;
  double alpha = 0.5;

  // coefficient multiplying |x - center| inside the profile
  double a_scale() const;
};

void validate(const SteadyStateParams& p);

// u_{c,A}(x) = A / [1 + (a_scale |x-c|)^2]^{(d-alpha)/2}
double eval_family(const SteadyStateParams& p, const Point& x);
double eval_family_radial(const SteadyStateParams& p, double r);

// coefficient of the singular solution |x|^{-(d-alpha)/2}
double singular_coefficient(int d, double alpha);

// u_sing(x) = [2^alpha (Gamma((d+alpha)/4)/Gamma((d-alpha)/4))^2]^{1/(p-1)} |x|^{-(d-alpha)/2}
double eval_singular(int d, double alpha, const Point& x);

// Kelvin transform (K u)(x) = |x-c|^{-(d-alpha)} u(c + (x-c)/|x-c|^2).
double kelvin(const std::function<double(const Point&)>& u, const Point& center, int d,
              double alpha, const Point& x);

struct ResidualReport {
  std::vector<double> radii;
  std::vector<double> residuals;  // u(r) - (Riesz potential of u^p)(r)
  double peak = 0.0;              // u(0), the normalization scale
  double max_normalized = 0.0;    // max |residual| / peak
};

struct ResidualOptions {
  double quad_rel_tol = 1e-9;
  double tail_budget = 1e-8;  // neglected tail mass relative to the peak
  double tail_exponent = 0.0; // 0 => assume the critical decay (d-alpha)
};

// R(r) = u(r) - Int A(d,alpha) u^p(y) / |y-x|^{d-alpha} dy for radial u.
// d = 1: direct quadrature with the weak singularity split off analytically;
// d = 2: radial reduction with numerical angular average;
// d = 3: radial reduction with the closed-form angular average.
ResidualReport riesz_residual(const std::function<double(double)>& u_radial, int d,
                              double alpha, double p, const std::vector<double>& radii,
                              const ResidualOptions& opt = {});

// Both sides of the Fourier-transformed fixed-point identity at |x| = r:
// lhs = Fourier transform of u_{0,A} in Macdonald closed form,
// rhs = (2 pi r)^{-alpha} A^p (2 pi a)^d B_{d+alpha}(2 pi a r).
struct FourierSidePair {
  double radius;
  double lhs;
  double rhs;
};
std::vector<FourierSidePair> fourier_side_check(double A, int d, double alpha,
                                                const std::vector<double>& radii);

}  // namespace fujita::steady
