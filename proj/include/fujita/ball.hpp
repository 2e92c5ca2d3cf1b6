#pragma once

// Dirichlet machinery of the unit ball for the alpha-stable process:
// Poisson kernel (exit law), Green function, exit-time Monte Carlo, the
// fixed-point solver for steady states of Delta_alpha u + F(u) = 0 with
// u = 0 outside the ball, the moving-planes symmetry sweep, and the
// boundary-exponent estimate.

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

namespace fujita::ball {

using Point = std::array<double, 3>;

// F(u) = offset + slope * u; non-decreasing, not identically constant when
// offset + slope > 0 and slope >= 0. Affine F keeps the Lipschitz constant
// exact for the contraction precheck.
struct BallNonlinearity {
  double offset = 0.1;
  double slope = 0.1;
  double operator()(double u) const { return offset + slope * u; }
  double lipschitz() const { return slope; }
};

struct BallKernelParams {
  double alpha = 1.0;
  int d = 1;
  double radius = 1.0;
  Point center{0.0, 0.0, 0.0};
  double C_poisson = 0.0;  // calibrated: exit law integrates to 1
  double c_green = 0.0;    // calibrated: Int G(0,y) dy = E_0 tau (Monte Carlo)
};

// Calibrates the two normalization constants for (alpha, d); cached. The
// Poisson constant comes from one radial quadrature, the Green constant from
// a high-precision step-halved exit-time Monte Carlo run with a fixed
// internal seed, frozen afterwards.
BallKernelParams make_ball_params(double alpha, int d, double radius = 1.0,
                                  Point center = {0.0, 0.0, 0.0});

// P(x,y) = C [ (r^2-|x-c|^2) / (|y-c|^2-r^2) ]^{alpha/2} |x-y|^{-d}
double poisson_kernel(const BallKernelParams& p, const Point& x, const Point& y);

// G(x,y) = c |x-y|^{alpha-d} Int_0^{w(x,y)} s^{alpha/2-1} (1+s)^{-d/2} ds,
// w = (r^2-|x-c|^2)(r^2-|y-c|^2)/|x-y|^2. Returns +inf on the diagonal when
// alpha <= d, the finite limit when alpha > d.
double green_function(const BallKernelParams& p, const Point& x, const Point& y);

// Int_0^w s^{a-1} (1+s)^{-b} ds by direct quadrature (oracle for the cached
// table the kernels use).
double green_inner_integral_exact(double a, double b, double w);

struct ExitTimeEstimate {
  double mean = 0.0;
  double se = 0.0;
  double dt = 0.0;
};

// Raw discrete-step estimate (exit declared at the first step outside).
ExitTimeEstimate exit_time_mc(double alpha, int d, const Point& x, int n_paths, double dt,
                              std::uint64_t seed);

// Step-halving Richardson extrapolation of the O(dt) observation bias.
ExitTimeEstimate exit_time_mc_extrapolated(double alpha, int d, const Point& x, int n_paths,
                                           double dt, std::uint64_t seed);

// |exit position| samples of the discrete chain started at 0 (d = 1).
std::vector<double> exit_position_mc_1d(double alpha, int n_paths, double dt,
                                        std::uint64_t seed);

struct BallSolution {
  double alpha = 1.0;
  int d = 1;
  BallNonlinearity F;
  std::vector<double> nodes;   // d=1: signed mesh on (-1,1); d=2: radii in [0,1]
  std::vector<double> values;  // solution at the nodes
  double symmetry_defect = 0.0;
  double boundary_exponent = 0.0;
  int iterations = 0;
  double sup_exit_time = 0.0;  // sup_x Int G(x,y) dy over the mesh
};

// Fixed-point iteration u <- Int G(.,y) F(u(y)) dy from u = 0 on a
// boundary-graded mesh; refuses (std::runtime_error) when the measured
// contraction bound lipschitz(F) * sup_x Int G(x,y) dy reaches 1.
BallSolution solve_ball_steady(const BallNonlinearity& F, double alpha, int d,
                               int mesh_points = 0);

// Solution value at radius r through the integral operator (accurate near
// the boundary, independent of mesh interpolation).
double eval_ball_solution(const BallSolution& sol, double r);

// log-log slope of u(1-eps) against eps over eps in [1e-3, 1e-1].
double boundary_exponent(const BallSolution& sol);

struct SymmetryViolation {
  double lambda;
  Point x;
  double w;  // u(x^lambda) - u(x), negative here
};

struct SymmetryReport {
  double lambda_sup = 0.0;
  std::vector<std::pair<double, double>> sweep;  // (lambda, min w over the cap)
  std::vector<SymmetryViolation> violations;
  bool derivative_condition_ok = true;
};

// Moving-planes sweep of lambda in (-1, 0] for reflections along planes
// normal to `direction`; u must vanish outside the unit ball. A negative
// lambda_sup with recorded violations is a finding, not a failure.
SymmetryReport symmetry_diagnostic(const std::function<double(const Point&)>& u, int d,
                                   const Point& direction, int n_grid = 200,
                                   double tol = 1e-9);

}  // namespace fujita::ball
