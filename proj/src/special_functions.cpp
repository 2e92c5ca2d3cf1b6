#include "fujita/special_functions.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "fujita/quadrature.hpp"

namespace fujita::special {

namespace {

// Lanczos g = 7, n = 9 coefficients (Godfrey's set).
constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,   676.5203681218851,     -1259.1392167224028,
    771.32342877765313,    -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,  9.9843695780195716e-6, 1.5056327351493116e-7};

double lanczos_gamma(double x) {
  // valid for x >= 0.5
  double a = kLanczos[0];
  const double t = x + kLanczosG - 0.5;
  for (int i = 1; i < 9; ++i) a += kLanczos[i] / (x - 1.0 + i);
  return std::sqrt(2.0 * std::numbers::pi) * std::pow(t, x - 0.5) * std::exp(-t) * a;
}

}  // namespace

double gamma_fn(double x) {
  if (!(x > 0.0)) {
    std::ostringstream msg;
    msg << "gamma_fn: argument must be positive, got " << x;
    throw std::domain_error(msg.str());
  }
  if (x < 0.5) {
    // reflection keeps full accuracy near the pole at 0
    return std::numbers::pi / (std::sin(std::numbers::pi * x) * lanczos_gamma(1.0 - x));
  }
  return lanczos_gamma(x);
}

double log_gamma(double x) {
  if (!(x > 0.0)) throw std::domain_error("log_gamma: argument must be positive");
  if (x < 0.5) return std::log(gamma_fn(x));
  double a = kLanczos[0];
  const double t = x + kLanczosG - 0.5;
  for (int i = 1; i < 9; ++i) a += kLanczos[i] / (x - 1.0 + i);
  return 0.5 * std::log(2.0 * std::numbers::pi) + (x - 0.5) * std::log(t) - t + std::log(a);
}

double bessel_k(double nu, double z) {
  if (!(z > 0.0)) {
    std::ostringstream msg;
    msg << "bessel_k: z must be positive, got " << z;
    throw std::domain_error(msg.str());
  }
  const double anu = std::fabs(nu);
  // integrand exp(-z cosh t) cosh(nu t), written as a sum of exponentials so
  // cosh(nu t) cannot overflow before the damping factor kills it
  auto integrand = [&](double t) {
    const double e = -z * std::cosh(t);
    const double a = e + anu * t;
    const double b = e - anu * t;
    return 0.5 * (std::exp(a) + std::exp(b));
  };
  // cutoff where z cosh t - |nu| t < log(DBL_MIN)
  double t_hi = 2.0;
  while (z * std::cosh(t_hi) - anu * t_hi < 745.0 && t_hi < 60.0) t_hi += 1.0;
  quad::Options opt;
  opt.rel_tol = 1e-12;
  try {
    return quad::integrate(integrand, 0.0, t_hi, opt);
  } catch (const quad::NonConvergent& e) {
    std::ostringstream msg;
    msg << "bessel_k(nu=" << nu << ", z=" << z << "): quadrature failed to converge, "
        << e.what();
    throw quad::NonConvergent(msg.str(), e.error_estimate());
  }
}

double b_kernel(double w, int d, double r) {
  if (!(w > 0.0) || !(r > 0.0)) {
    std::ostringstream msg;
    msg << "b_kernel: requires w > 0 and r > 0, got w=" << w << ", r=" << r;
    throw std::domain_error(msg.str());
  }
  const double lead =
      std::pow(2.0, 0.5 * (d - w) + 1.0) /
      (gamma_fn(0.5 * w) * std::pow(4.0 * std::numbers::pi, 0.5 * d));
  return lead * std::pow(r, 0.5 * (w - d)) * bessel_k(0.5 * (d - w), r);
}

double b_kernel_by_integral(double w, int d, double r) {
  if (!(w > 0.0) || !(r > 0.0)) throw std::domain_error("b_kernel_by_integral: w, r must be > 0");
  const double q = 0.5 * (w - d);
  // substitute s = e^t: Int exp(q t - e^t - (r^2/4) e^{-t}) dt over the real line
  auto integrand = [&](double t) {
    const double e = std::exp(t);
    const double arg = q * t - e - 0.25 * r * r / e;
    return arg < -745.0 ? 0.0 : std::exp(arg);
  };
  quad::Options opt;
  opt.rel_tol = 1e-12;
  const double lo = -60.0, hi = 60.0;
  const double integral = quad::integrate(integrand, lo, 0.0, opt) +
                          quad::integrate(integrand, 0.0, hi, opt);
  return integral / (gamma_fn(0.5 * w) * std::pow(4.0 * std::numbers::pi, 0.5 * d));
}

RieszConstant riesz_constant(int d, double alpha) {
  if (!(alpha > 0.0) || alpha > 2.0) throw std::domain_error("riesz_constant: alpha outside (0,2]");
  if (!(static_cast<double>(d) > alpha)) {
    std::ostringstream msg;
    msg << "riesz_constant: requires d > alpha (recurrent regime otherwise), got d=" << d
        << ", alpha=" << alpha;
    throw std::domain_error(msg.str());
  }
  const double value = gamma_fn(0.5 * (d - alpha)) /
                       (gamma_fn(0.5 * alpha) * std::pow(2.0, alpha) *
                        std::pow(std::numbers::pi, 0.5 * d));
  return RieszConstant{d, alpha, value};
}

}  // namespace fujita::special
