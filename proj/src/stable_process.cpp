#include "fujita/stable_process.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "fujita/quadrature.hpp"
#include "fujita/special_functions.hpp"

namespace fujita::stable {

namespace {

constexpr double kPi = std::numbers::pi;

void check_alpha(double alpha) {
  if (!(alpha > 0.0) || alpha > 2.0) {
    std::ostringstream msg;
    msg << "stable: alpha must lie in (0, 2], got " << alpha;
    throw std::domain_error(msg.str());
  }
}

// Chambers-Mallows-Stuck, symmetric case, standardized to ch.f. exp(-|t|^alpha).
double cms_symmetric(double alpha, Rng& rng) {
  const double u = rng.uniform(-0.5 * kPi, 0.5 * kPi);
  const double e = rng.exponential();
  if (alpha == 1.0) return std::tan(u);
  if (alpha == 2.0) return 2.0 * std::sin(u) * std::sqrt(e);
  const double s = std::sin(alpha * u) / std::pow(std::cos(u), 1.0 / alpha);
  const double t = std::pow(std::cos((1.0 - alpha) * u) / e, (1.0 - alpha) / alpha);
  return s * t;
}

}  // namespace

double sample_subordinator(double a, Rng& rng) {
  if (!(a > 0.0) || !(a < 1.0)) throw std::domain_error("sample_subordinator: a outside (0,1)");
  const double u = rng.uniform(0.0, kPi);
  const double e = rng.exponential();
  const double ratio = (1.0 - a) / a;
  const double A = std::pow(std::sin(a * u), a / (1.0 - a)) * std::sin((1.0 - a) * u) /
                   std::pow(std::sin(u), 1.0 / (1.0 - a));
  return std::pow(A / e, ratio);
}

Point sample_increment(double alpha, double h, int d, Rng& rng) {
  check_alpha(alpha);
  if (!(h > 0.0)) throw std::domain_error("sample_increment: h must be > 0");
  if (d < 1 || d > 3) throw std::domain_error("sample_increment: d must be in {1,2,3}");
  Point x{0.0, 0.0, 0.0};
  if (d == 1) {
    x[0] = std::pow(h, 1.0 / alpha) * cms_symmetric(alpha, rng);
    return x;
  }
  if (alpha == 2.0) {
    // ch.f. exp(-h ||theta||^2) is N(0, 2h I)
    const double s = std::sqrt(2.0 * h);
    for (int j = 0; j < d; ++j) x[j] = s * rng.gaussian();
    return x;
  }
  // X = sqrt(2 S) Z with S an alpha/2-subordinator at time h:
  // E exp(i theta.X) = E exp(-S ||theta||^2) = exp(-h ||theta||^alpha)
  const double s_h = std::pow(h, 2.0 / alpha) * sample_subordinator(0.5 * alpha, rng);
  const double scale = std::sqrt(2.0 * s_h);
  for (int j = 0; j < d; ++j) x[j] = scale * rng.gaussian();
  return x;
}

StablePath simulate_path(double alpha, int d, const Point& x0,
                         const std::vector<double>& times, std::uint64_t seed) {
  check_alpha(alpha);
  if (times.empty() || times.front() != 0.0)
    throw std::invalid_argument("simulate_path: times must start at 0");
  for (std::size_t i = 1; i < times.size(); ++i)
    if (!(times[i] > times[i - 1]))
      throw std::invalid_argument("simulate_path: times must be strictly increasing");

  StablePath path;
  path.alpha = alpha;
  path.d = d;
  path.times = times;
  path.seed = seed;
  path.positions.resize(times.size());
  path.positions[0] = x0;
  Rng rng(seed, 0);
  for (std::size_t i = 1; i < times.size(); ++i) {
    const Point inc = sample_increment(alpha, times[i] - times[i - 1], d, rng);
    for (int j = 0; j < d; ++j) path.positions[i][j] = path.positions[i - 1][j] + inc[j];
  }
  return path;
}

namespace {

// Int_0^inf f(theta) osc(theta r) dtheta where osc has sign-constant lobes
// between the provided zeros; lobes are Gauss-Kronrod panels summed with
// Euler acceleration once they alternate.
template <class F, class ZeroFn>
double oscillatory_integral(const F& integrand, const ZeroFn& zero, double theta_max,
                            double tol) {
  // tanh-sinh on the head: for alpha < 1 the envelope exp(-t theta^alpha) has
  // a Hoelder endpoint at theta = 0
  const double z1 = zero(1);
  if (!(z1 < theta_max)) {
    return quad::integrate_tanh_sinh(integrand, 0.0, theta_max, {tol, 0.0, 48});
  }
  double total = quad::integrate_tanh_sinh(integrand, 0.0, z1, {tol, 0.0, 48});
  std::vector<double> lobes;
  double prev = z1;
  const int max_lobes = 600;
  for (int k = 2; k <= max_lobes + 1; ++k) {
    double next = std::min(zero(k), theta_max);
    lobes.push_back(quad::integrate(integrand, prev, next, {10.0 * tol, 1e-300, 44}));
    prev = next;
    if (next >= theta_max) break;
    if (lobes.size() >= 12 && lobes.size() % 4 == 0) {
      const double tail = quad::accelerate_alternating(lobes);
      const double direct = quad::accelerate_alternating(
          std::vector<double>(lobes.begin(), lobes.end() - 2));
      if (std::fabs(tail - direct) <= tol * (std::fabs(total + tail) + 1e-300))
        return total + tail;
    }
  }
  return total + quad::accelerate_alternating(lobes);
}

double bessel_j_zero0(int k) {
  // asymptotic McMahon expansion for j_{0,k}; ample for lobe splitting
  const double b = (k - 0.25) * kPi;
  return b + 1.0 / (8.0 * b);
}

}  // namespace

double transition_density_radial(double alpha, int d, double t, double r) {
  check_alpha(alpha);
  if (!(t > 0.0)) throw std::domain_error("transition_density: t must be > 0");
  if (d < 1 || d > 3) throw std::domain_error("transition_density: d must be in {1,2,3}");
  r = std::fabs(r);

  if (alpha == 2.0) {
    return std::pow(4.0 * kPi * t, -0.5 * d) * std::exp(-r * r / (4.0 * t));
  }
  if (alpha == 1.0) {
    const double lead = special::gamma_fn(0.5 * (d + 1)) / std::pow(kPi, 0.5 * (d + 1));
    return lead * t / std::pow(t * t + r * r, 0.5 * (d + 1));
  }

  // Fourier inversion of exp(-t theta^alpha), radial reduction
  const double theta_max = std::pow(745.0 / t, 1.0 / alpha);
  const double tol = 1e-9;
  auto envelope = [&](double th) { return std::exp(-t * std::pow(th, alpha)); };
  // radial moment Int envelope theta^m dtheta with the Hoelder endpoint and
  // the long tail handled separately (log variable)
  auto moment = [&](double m) {
    auto head = [&](double th) { return envelope(th) * std::pow(th, m); };
    double v = quad::integrate_tanh_sinh(head, 0.0, std::min(1.0, theta_max), {tol, 0.0, 48});
    if (theta_max > 1.0) {
      auto tail = [&](double u) {
        const double th = std::exp(u);
        return envelope(th) * std::pow(th, m + 1.0);
      };
      v += quad::integrate(tail, 0.0, std::log(theta_max), {tol, 1e-300, 48});
    }
    return v;
  };
  if (d == 1) {
    if (r == 0.0) {
      // (1/pi) Int exp(-t theta^alpha) dtheta = Gamma(1+1/alpha) t^{-1/alpha} / pi
      return special::gamma_fn(1.0 + 1.0 / alpha) * std::pow(t, -1.0 / alpha) / kPi;
    }
    auto f = [&](double th) { return envelope(th) * std::cos(th * r); };
    auto zero = [&](int k) { return (k - 0.5) * kPi / r; };
    return oscillatory_integral(f, zero, theta_max, tol) / kPi;
  }
  if (d == 2) {
    auto f = [&](double th) { return envelope(th) * th * std::cyl_bessel_j(0.0, th * r); };
    if (r == 0.0) return moment(1.0) / (2.0 * kPi);
    auto zero = [&](int k) { return bessel_j_zero0(k) / r; };
    return oscillatory_integral(f, zero, theta_max, tol) / (2.0 * kPi);
  }
  // d == 3
  if (r == 0.0) return moment(2.0) / (2.0 * kPi * kPi);
  auto f = [&](double th) { return envelope(th) * th * std::sin(th * r); };
  auto zero = [&](int k) { return k * kPi / r; };
  return oscillatory_integral(f, zero, theta_max, tol) / (2.0 * kPi * kPi * r);
}

double transition_density(double alpha, int d, double t, const Point& x, const Point& y) {
  double r2 = 0.0;
  for (int j = 0; j < d; ++j) r2 += (x[j] - y[j]) * (x[j] - y[j]);
  return transition_density_radial(alpha, d, t, std::sqrt(r2));
}

}  // namespace fujita::stable
