#include "fujita/steady_states.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "fujita/quadrature.hpp"
#include "fujita/special_functions.hpp"

namespace fujita::steady {

namespace {

constexpr double kPi = std::numbers::pi;

double norm3(const Point& x, const Point& c, int d) {
  double s = 0.0;
  for (int j = 0; j < d; ++j) s += (x[j] - c[j]) * (x[j] - c[j]);
  return std::sqrt(s);
}

}  // namespace

void validate(const SteadyStateParams& p) {
  if (!(p.A > 0.0)) throw std::invalid_argument("SteadyStateParams: A must be > 0");
  if (!(p.alpha > 0.0) || p.alpha > 2.0)
    throw std::invalid_argument("SteadyStateParams: alpha outside (0,2]");
  if (!(static_cast<double>(p.d) > p.alpha))
    throw std::invalid_argument("SteadyStateParams: requires d > alpha");
}

double SteadyStateParams::a_scale() const {
  const double ratio = special::gamma_fn(0.5 * (d + alpha)) / special::gamma_fn(0.5 * (d - alpha));
  return std::pow(A, 2.0 / (d - alpha)) * 0.5 * std::pow(ratio, -1.0 / alpha);
}

double eval_family_radial(const SteadyStateParams& p, double r) {
  const double s = p.a_scale() * std::fabs(r);
  return p.A * std::pow(1.0 + s * s, -0.5 * (p.d - p.alpha));
}

double eval_family(const SteadyStateParams& p, const Point& x) {
  return eval_family_radial(p, norm3(x, p.center, p.d));
}

double singular_coefficient(int d, double alpha) {
  if (!(static_cast<double>(d) > alpha))
    throw std::domain_error("singular_coefficient: requires d > alpha");
  const double p = (d + alpha) / (d - alpha);
  const double ratio = special::gamma_fn(0.25 * (d + alpha)) / special::gamma_fn(0.25 * (d - alpha));
  return std::pow(std::pow(2.0, alpha) * ratio * ratio, 1.0 / (p - 1.0));
}

double eval_singular(int d, double alpha, const Point& x) {
  const double r = norm3(x, Point{0, 0, 0}, d);
  if (r == 0.0) throw std::domain_error("eval_singular: x = 0 is the singularity");
  return singular_coefficient(d, alpha) * std::pow(r, -0.5 * (d - alpha));
}

double kelvin(const std::function<double(const Point&)>& u, const Point& center, int d,
              double alpha, const Point& x) {
  const double r = norm3(x, center, d);
  if (r == 0.0) throw std::domain_error("kelvin: x must differ from the center");
  Point inv = center;
  for (int j = 0; j < d; ++j) inv[j] = center[j] + (x[j] - center[j]) / (r * r);
  return std::pow(r, -(d - alpha)) * u(inv);
}

namespace {

// Riesz potential of u^p at radius r for radial u in d = 1:
// Int A u^p(y) |y - r|^{alpha-1} dy with the singular factor split off
// analytically on [r-delta, r+delta].
double riesz_potential_1d(const std::function<double(double)>& u, double alpha, double p,
                          double r, double r_big, double rel_tol, double a_const) {
  auto up = [&](double y) { return std::pow(std::max(u(y), 0.0), p); };
  const double delta = 0.25;
  const double up_r = up(r);
  quad::Options qopt{rel_tol, 1e-14, 46};

  // |y - r| <= delta: u^p(y) = up_r + (u^p(y) - up_r); first term analytic
  double near = up_r * 2.0 * std::pow(delta, alpha) / alpha;
  auto near_diff = [&](double y) {
    return (up(y) - up_r) * std::pow(std::fabs(y - r), alpha - 1.0);
  };
  near += quad::integrate_tanh_sinh(near_diff, r - delta, r, qopt);
  near += quad::integrate_tanh_sinh(near_diff, r, r + delta, qopt);

  // the rest of [-X0, X0]
  const double X0 = std::max(10.0, 2.0 * std::fabs(r) + 10.0);
  auto plain = [&](double y) { return up(y) * std::pow(std::fabs(y - r), alpha - 1.0); };
  double mid = quad::integrate(plain, -X0, r - delta, qopt) +
               quad::integrate(plain, r + delta, X0, qopt);

  // |y| > X0: substitute y = X0 e^s (and the mirror), exponential decay in s
  const double s_max = std::log(std::max(r_big, 2.0 * X0) / X0);
  auto tail_pos = [&](double s) {
    const double y = X0 * std::exp(s);
    return up(y) * std::pow(y - r, alpha - 1.0) * y;
  };
  auto tail_neg = [&](double s) {
    const double y = X0 * std::exp(s);
    return up(-y) * std::pow(y + r, alpha - 1.0) * y;
  };
  double tail = quad::integrate(tail_pos, 0.0, s_max, qopt) +
                quad::integrate(tail_neg, 0.0, s_max, qopt);

  return a_const * (near + mid + tail);
}

// spherical average of |x - y|^{alpha - d} over the sphere |y| = rho, d = 3
double angular_avg_d3(double alpha, double r, double rho) {
  if (r == 0.0) return std::pow(rho, alpha - 3.0);
  const double lo = std::fabs(r - rho), hi = r + rho;
  if (alpha == 1.0) {
    if (lo == 0.0) return std::numeric_limits<double>::infinity();
    return std::log(hi / lo) / (2.0 * r * rho);
  }
  return (std::pow(lo, alpha - 1.0) - std::pow(hi, alpha - 1.0)) /
         (2.0 * r * rho * (1.0 - alpha));
}

// spherical average for d = 2 by angular quadrature
double angular_avg_d2(double alpha, double r, double rho, double rel_tol) {
  if (r == 0.0) return std::pow(rho, alpha - 2.0);
  auto f = [&](double th) {
    const double q2 = r * r + rho * rho - 2.0 * r * rho * std::cos(th);
    return std::pow(q2, 0.5 * (alpha - 2.0));
  };
  quad::Options qopt{rel_tol, 0.0, 40};
  const double split = 0.5;
  return (quad::integrate_tanh_sinh(f, 0.0, split, qopt) +
          quad::integrate(f, split, kPi, qopt)) /
         kPi;
}

double riesz_potential_radial(const std::function<double(double)>& u, int d, double alpha,
                              double p, double r, double r_big, double rel_tol,
                              double a_const) {
  auto up = [&](double rho) { return std::pow(std::max(u(rho), 0.0), p); };
  const double area = 2.0 * std::pow(kPi, 0.5 * d) / special::gamma_fn(0.5 * d);
  auto avg = [&](double rho) {
    return d == 3 ? angular_avg_d3(alpha, r, rho) : angular_avg_d2(alpha, r, rho, rel_tol);
  };
  auto w = [&](double rho) { return up(rho) * avg(rho) * std::pow(rho, d - 1.0); };
  quad::Options qopt{rel_tol, 1e-14, 44};

  const double X0 = std::max(10.0, 2.0 * r + 10.0);
  double total = 0.0;
  if (r > 0.0) {
    // integrable singularity of the averaged kernel at rho = r
    total += quad::integrate_tanh_sinh(w, 0.0, r, qopt);
    total += quad::integrate_tanh_sinh(w, r, std::min(2.0 * r, X0), qopt);
    if (2.0 * r < X0) total += quad::integrate(w, 2.0 * r, X0, qopt);
  } else {
    total += quad::integrate(w, 0.0, X0, qopt);
  }
  const double s_max = std::log(std::max(r_big, 2.0 * X0) / X0);
  auto tail = [&](double s) {
    const double rho = X0 * std::exp(s);
    return w(rho) * rho;
  };
  total += quad::integrate(tail, 0.0, s_max, qopt);
  return a_const * area * total;
}

}  // namespace

ResidualReport riesz_residual(const std::function<double(double)>& u_radial, int d,
                              double alpha, double p, const std::vector<double>& radii,
                              const ResidualOptions& opt) {
  if (d != 1 && d != 2 && d != 3)
    throw std::domain_error("riesz_residual: d must be in {1,2,3}");
  if (!(static_cast<double>(d) > alpha))
    throw std::domain_error("riesz_residual: requires d > alpha");
  const double a_const = special::riesz_constant(d, alpha).value;

  ResidualReport rep;
  rep.radii = radii;
  rep.residuals.resize(radii.size());
  rep.peak = std::fabs(u_radial(0.0));

  // truncation radius from the tail exponent: beyond R the integrand decays
  // like rho^{-(1 + (p+1)(d-alpha) - alpha - d + 1)}; pick R so the neglected
  // mass is below tail_budget * peak
  const double decay = opt.tail_exponent > 0.0 ? opt.tail_exponent : (d - alpha);
  double tail_c = std::fabs(u_radial(100.0)) * std::pow(100.0, decay);
  if (tail_c == 0.0) tail_c = rep.peak;  // compactly supported input: any finite R works
  const double drop = p * decay + (d - alpha) - d;  // integrand ~ rho^{-1-drop}
  double r_big = 1e6;
  if (drop > 0.0 && rep.peak > 0.0) {
    const double num = a_const * std::pow(tail_c, p) * 2.0 * std::pow(kPi, 0.5 * d) /
                       special::gamma_fn(0.5 * d) / drop;
    r_big = std::pow(num / (opt.tail_budget * rep.peak + 1e-300), 1.0 / drop);
    r_big = std::min(std::max(r_big, 1e3), 1e9);
  }

  for (std::size_t i = 0; i < radii.size(); ++i) {
    const double r = radii[i];
    const double pot =
        d == 1 ? riesz_potential_1d(u_radial, alpha, p, r, r_big, opt.quad_rel_tol, a_const)
               : riesz_potential_radial(u_radial, d, alpha, p, r, r_big, opt.quad_rel_tol,
                                        a_const);
    rep.residuals[i] = u_radial(r) - pot;
  }
  double m = 0.0;
  for (double v : rep.residuals) m = std::max(m, std::fabs(v));
  rep.max_normalized = rep.peak > 0.0 ? m / rep.peak : m;
  return rep;
}

std::vector<FourierSidePair> fourier_side_check(double A, int d, double alpha,
                                                const std::vector<double>& radii) {
  SteadyStateParams params{{0, 0, 0}, A, d, alpha};
  validate(params);
  const double p = (d + alpha) / (d - alpha);
  const double a = 1.0 / params.a_scale();
  std::vector<FourierSidePair> out;
  out.reserve(radii.size());
  for (double r : radii) {
    if (!(r > 0.0)) throw std::domain_error("fourier_side_check: radius must be > 0");
    const double z = 2.0 * kPi * a * r;
    const double lhs = A * std::pow(a, d - 0.5 * alpha) * std::pow(kPi, 0.5 * (d - alpha)) *
                       (2.0 / special::gamma_fn(0.5 * (d - alpha))) *
                       std::pow(r, -0.5 * alpha) * special::bessel_k(0.5 * alpha, z);
    const double rhs = std::pow(2.0 * kPi * r, -alpha) * std::pow(A, p) *
                       std::pow(2.0 * kPi * a, static_cast<double>(d)) *
                       special::b_kernel(d + alpha, d, z);
    out.push_back({r, lhs, rhs});
  }
  return out;
}

}  // namespace fujita::steady
