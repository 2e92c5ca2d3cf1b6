#include "fujita/ball.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "fujita/parallel.hpp"
#include "fujita/quadrature.hpp"
#include "fujita/rng.hpp"
#include "fujita/special_functions.hpp"
#include "fujita/stable_process.hpp"

namespace fujita::ball {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::uint64_t kCalibrationSeed = 0x6a09e667f3bcc908ULL;

double dist(const Point& x, const Point& y, int d) {
  double s = 0.0;
  for (int j = 0; j < d; ++j) s += (x[j] - y[j]) * (x[j] - y[j]);
  return std::sqrt(s);
}

void check_params(double alpha, int d) {
  if (!(alpha > 0.0) || !(alpha < 2.0))
    throw std::domain_error("ball: alpha must lie in (0,2)");
  if (d < 1 || d > 3) throw std::domain_error("ball: d must be in {1,2,3}");
}

double sphere_area(int d) {
  return 2.0 * std::pow(kPi, 0.5 * d) / special::gamma_fn(0.5 * d);
}

// ---------------------------------------------------------------------------
// inner integral I(w) = Int_0^w s^{a-1}(1+s)^{-b} ds and its cached table
// ---------------------------------------------------------------------------

double inner_small_w(double a, double b, double w) {
  // Int_0^w s^{a-1}(1 - b s + ...) ds
  return std::pow(w, a) * (1.0 / a - b * w / (a + 1.0));
}

double inner_tail(double a, double b, double w) {
  // Int_w^inf s^{a-1}(1+s)^{-b} ds for large w (a < b)
  return std::pow(w, a - b) * (1.0 / (b - a) - b / ((b - a + 1.0) * w));
}

}  // namespace

double green_inner_integral_exact(double a, double b, double w) {
  if (!(w >= 0.0)) throw std::domain_error("green_inner_integral: w must be >= 0");
  if (w == 0.0) return 0.0;
  if (a == 0.5 && b == 0.5) return 2.0 * std::asinh(std::sqrt(w));
  if (w < 1e-10) return inner_small_w(a, b, w);
  quad::Options qopt{1e-12, 0.0, 46};
  // s in (0, min(w,1)]: tanh-sinh absorbs the s^{a-1} endpoint
  auto f = [&](double s) { return std::pow(s, a - 1.0) * std::pow(1.0 + s, -b); };
  double total = quad::integrate_tanh_sinh(f, 0.0, std::min(w, 1.0), qopt);
  if (w > 1.0) {
    // log substitution keeps the long range cheap
    auto g = [&](double u) {
      const double s = std::exp(u);
      return std::pow(s, a) * std::pow(1.0 + s, -b);
    };
    total += quad::integrate(g, 0.0, std::log(w), qopt);
  }
  return total;
}

namespace {

// Hermite interpolation table of I(e^s) with exact derivative
// d/ds I(e^s) = e^{sa}(1+e^s)^{-b}; anchored asymptotics outside the range.
class InnerTable {
 public:
  InnerTable(double a, double b) : a_(a), b_(b) {
    const int n = static_cast<int>((kHi - kLo) / kH) + 1;
    s_.resize(n);
    v_.resize(n);
    for (int i = 0; i < n; ++i) s_[i] = kLo + i * kH;
    v_[0] = green_inner_integral_exact(a, b, std::exp(s_[0]));
    for (int i = 1; i < n; ++i) {
      auto f = [&](double s) {
        const double e = std::exp(s);
        return std::pow(e, a) * std::pow(1.0 + e, -b);
      };
      v_[i] = v_[i - 1] + quad::integrate(f, s_[i - 1], s_[i], {1e-13, 1e-18, 30});
    }
    anchor_hi_ = v_.back();
  }

  double operator()(double w) const {
    if (w <= 0.0) return 0.0;
    const double s = std::log(w);
    if (s <= kLo) return inner_small_w(a_, b_, w);
    if (s >= kHi) {
      const double w_hi = std::exp(kHi);
      if (a_ < b_) return anchor_hi_ + inner_tail(a_, b_, w_hi) - inner_tail(a_, b_, w);
      // a > b: integrand grows; anchored expansion of the primitive
      auto prim = [&](double x) {
        return std::pow(x, a_ - b_) / (a_ - b_) -
               (a_ - b_ - 1.0 != 0.0 ? b_ * std::pow(x, a_ - b_ - 1.0) / (a_ - b_ - 1.0) : 0.0);
      };
      return anchor_hi_ + prim(w) - prim(w_hi);
    }
    const int i = std::min(static_cast<int>((s - kLo) / kH), static_cast<int>(s_.size()) - 2);
    const double t = (s - s_[i]) / kH;
    auto deriv = [&](double sv) {
      const double e = std::exp(sv);
      return std::pow(e, a_) * std::pow(1.0 + e, -b_) * kH;
    };
    const double h00 = (1 + 2 * t) * (1 - t) * (1 - t);
    const double h10 = t * (1 - t) * (1 - t);
    const double h01 = t * t * (3 - 2 * t);
    const double h11 = t * t * (t - 1);
    return h00 * v_[i] + h10 * deriv(s_[i]) + h01 * v_[i + 1] + h11 * deriv(s_[i + 1]);
  }

 private:
  static constexpr double kLo = -21.0;  // below: small-w expansion, error < 1e-11 rel
  static constexpr double kHi = 55.0;
  static constexpr double kH = 0.0625;
  double a_, b_, anchor_hi_;
  std::vector<double> s_, v_;
};

const InnerTable& inner_table(double alpha, int d) {
  static std::map<std::pair<double, int>, std::unique_ptr<InnerTable>> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[{alpha, d}];
  if (!slot) slot = std::make_unique<InnerTable>(0.5 * alpha, 0.5 * d);
  return *slot;
}

// ---------------------------------------------------------------------------
// calibration
// ---------------------------------------------------------------------------

// Int over the exterior of the unit ball of the Poisson kernel with C = 1.
double poisson_normalization_integral(double alpha, int d, double rho_x) {
  // integrand over |y| = rho > 1, spherically averaged |x-y|^{-d}
  auto avg_inv_d = [&](double rho) -> double {
    if (rho_x == 0.0) return std::pow(rho, -static_cast<double>(d));
    if (d == 1)
      return 0.5 * (std::pow(rho - rho_x, -1.0) + std::pow(rho + rho_x, -1.0));
    if (d == 3) {
      // (1/2) Int (rho_x^2+rho^2-2 rho_x rho m)^{-3/2} dm has a closed form
      const double lo = rho - rho_x, hi = rho + rho_x;
      return (1.0 / lo - 1.0 / hi) / (2.0 * rho_x * rho);
    }
    auto f = [&](double th) {
      const double q2 = rho_x * rho_x + rho * rho - 2.0 * rho_x * rho * std::cos(th);
      return std::pow(q2, -1.0);
    };
    return quad::integrate_tanh_sinh(f, 0.0, kPi, {1e-11, 0.0, 40}) / kPi;
  };
  auto radial = [&](double rho) {
    const double t = (1.0 - rho_x * rho_x) / (rho * rho - 1.0);
    return std::pow(t, 0.5 * alpha) * avg_inv_d(rho) * std::pow(rho, d - 1.0);
  };
  const double area = sphere_area(d);
  quad::Options qopt{1e-11, 0.0, 46};
  double total = quad::integrate_tanh_sinh(radial, 1.0, 2.0, qopt);
  auto tail = [&](double u) {
    const double rho = 2.0 * std::exp(u);
    return radial(rho) * rho;
  };
  total += quad::integrate(tail, 0.0, 34.0, qopt);
  return area * total;
}

struct Calibration {
  double C_poisson;
  double c_green;
  double exit_time_mean;  // calibration E_0 tau estimate
  double exit_time_se;
};

double unit_exit_row_integral(double alpha, int d);  // forward

const Calibration& calibration(double alpha, int d) {
  static std::map<std::pair<double, int>, Calibration> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find({alpha, d});
  if (it != cache.end()) return it->second;

  Calibration cal{};
  cal.C_poisson = 1.0 / poisson_normalization_integral(alpha, d, 0.0);

  // exit-time identity Int G(0,y) dy = E_0 tau with the Monte Carlo mean
  const Point origin{0.0, 0.0, 0.0};
  ExitTimeEstimate tau = exit_time_mc_extrapolated(alpha, d, origin, 100000, 8e-4,
                                                   kCalibrationSeed);
  cal.exit_time_mean = tau.mean;
  cal.exit_time_se = tau.se;
  cal.c_green = tau.mean / unit_exit_row_integral(alpha, d);

  auto [pos, ok] = cache.insert({{alpha, d}, cal});
  (void)ok;
  return pos->second;
}

// Int_{B_1} |y|-integral of the unnormalized Green kernel at x = 0.
double unit_exit_row_integral(double alpha, int d) {
  const auto& table = inner_table(alpha, d);
  auto g0 = [&](double rho) {
    const double w = (1.0 - rho * rho) / (rho * rho);
    return std::pow(rho, alpha - d) * table(w) * std::pow(rho, d - 1.0);
  };
  quad::Options qopt{1e-11, 0.0, 46};
  const double area = sphere_area(d);
  return area * (quad::integrate_tanh_sinh(g0, 0.0, 0.5, qopt) +
                 quad::integrate_tanh_sinh(g0, 0.5, 1.0, qopt));
}

}  // namespace

BallKernelParams make_ball_params(double alpha, int d, double radius, Point center) {
  check_params(alpha, d);
  if (!(radius > 0.0)) throw std::domain_error("make_ball_params: radius must be > 0");
  const Calibration& cal = calibration(alpha, d);
  BallKernelParams p;
  p.alpha = alpha;
  p.d = d;
  p.radius = radius;
  p.center = center;
  p.C_poisson = cal.C_poisson;
  p.c_green = cal.c_green;
  return p;
}

double poisson_kernel(const BallKernelParams& p, const Point& x, const Point& y) {
  const double rx = dist(x, p.center, p.d);
  const double ry = dist(y, p.center, p.d);
  if (!(rx < p.radius) || !(ry > p.radius)) {
    std::ostringstream msg;
    msg << "poisson_kernel: needs |x-c| < radius < |y-c|, got |x-c|=" << rx
        << ", |y-c|=" << ry << ", radius=" << p.radius;
    throw std::domain_error(msg.str());
  }
  const double r2 = p.radius * p.radius;
  const double ratio = (r2 - rx * rx) / (ry * ry - r2);
  return p.C_poisson * std::pow(ratio, 0.5 * p.alpha) *
         std::pow(dist(x, y, p.d), -static_cast<double>(p.d));
}

double green_function(const BallKernelParams& p, const Point& x, const Point& y) {
  const double rx = dist(x, p.center, p.d);
  const double ry = dist(y, p.center, p.d);
  if (!(rx < p.radius) || !(ry < p.radius))
    throw std::domain_error("green_function: both arguments must be interior points");
  const double q = dist(x, y, p.d);
  const double r2 = p.radius * p.radius;
  if (q == 0.0) {
    if (p.alpha <= static_cast<double>(p.d))
      return std::numeric_limits<double>::infinity();
    // alpha > d (only d=1, alpha>1 here): finite diagonal limit
    const double a = 0.5 * p.alpha, b = 0.5 * p.d;
    return p.c_green * std::pow((r2 - rx * rx) * (r2 - ry * ry), 0.5 * (p.alpha - p.d)) /
           (a - b);
  }
  const double w = (r2 - rx * rx) * (r2 - ry * ry) / (q * q);
  return p.c_green * std::pow(q, p.alpha - p.d) * inner_table(p.alpha, p.d)(w);
}

ExitTimeEstimate exit_time_mc(double alpha, int d, const Point& x, int n_paths, double dt,
                              std::uint64_t seed) {
  check_params(alpha, d);
  if (!(dt > 0.0)) throw std::domain_error("exit_time_mc: dt must be > 0");
  const double t_cap = 100.0;
  const auto max_steps = static_cast<std::int64_t>(t_cap / dt);
  std::vector<double> taus(n_paths);
  parallel_for(static_cast<std::size_t>(n_paths), [&](std::size_t i) {
    Rng rng(seed, i);
    Point pos = x;
    double tau = t_cap;
    for (std::int64_t k = 1; k <= max_steps; ++k) {
      const auto inc = stable::sample_increment(alpha, dt, d, rng);
      double r2 = 0.0;
      for (int j = 0; j < d; ++j) {
        pos[j] += inc[j];
        r2 += pos[j] * pos[j];
      }
      if (r2 > 1.0) {
        tau = k * dt;
        break;
      }
    }
    taus[i] = tau;
  });
  double sum = 0.0;
  for (double v : taus) sum += v;
  const double mean = sum / n_paths;
  double ss = 0.0;
  for (double v : taus) ss += (v - mean) * (v - mean);
  ExitTimeEstimate est;
  est.mean = mean;
  est.se = std::sqrt(ss / (n_paths - 1.0) / n_paths);
  est.dt = dt;
  return est;
}

ExitTimeEstimate exit_time_mc_extrapolated(double alpha, int d, const Point& x, int n_paths,
                                           double dt, std::uint64_t seed) {
  const ExitTimeEstimate coarse = exit_time_mc(alpha, d, x, n_paths, dt, seed);
  const ExitTimeEstimate fine = exit_time_mc(alpha, d, x, n_paths, 0.5 * dt, seed + 1);
  ExitTimeEstimate est;
  est.mean = 2.0 * fine.mean - coarse.mean;
  est.se = std::sqrt(4.0 * fine.se * fine.se + coarse.se * coarse.se);
  est.dt = dt;
  return est;
}

std::vector<double> exit_position_mc_1d(double alpha, int n_paths, double dt,
                                        std::uint64_t seed) {
  check_params(alpha, 1);
  const auto max_steps = static_cast<std::int64_t>(100.0 / dt);
  std::vector<double> out(n_paths);
  parallel_for(static_cast<std::size_t>(n_paths), [&](std::size_t i) {
    Rng rng(seed, i);
    double pos = 0.0;
    double hit = 1.0;
    for (std::int64_t k = 1; k <= max_steps; ++k) {
      pos += stable::sample_increment(alpha, dt, 1, rng)[0];
      if (std::fabs(pos) > 1.0) {
        hit = std::fabs(pos);
        break;
      }
    }
    out[i] = hit;
  });
  return out;
}

// ---------------------------------------------------------------------------
// fixed-point solver
// ---------------------------------------------------------------------------

namespace {

// boundary-graded nodes: +-cos spacing so the alpha/2 boundary layer resolves
std::vector<double> mesh_1d(int m) {
  std::vector<double> nodes(m + 1);
  for (int j = 0; j <= m; ++j) nodes[j] = -std::cos(kPi * j / m);
  return nodes;
}

std::vector<double> mesh_radial(int m) {
  std::vector<double> nodes(m + 1);
  for (int j = 0; j <= m; ++j) nodes[j] = std::sin(0.5 * kPi * j / m);
  return nodes;
}

// d = 1 unit-ball Green kernel value (unnormalized by c_green)
double green_1d_raw(const InnerTable& table, double alpha, double x, double y) {
  const double q = std::fabs(x - y);
  const double w = (1.0 - x * x) * (1.0 - y * y) / (q * q);
  return std::pow(q, alpha - 1.0) * table(w);
}

// angular average A(r,rho) = (1/2pi) Int_0^{2pi} G dtheta (unnormalized), d = 2
double green_2d_angular_raw(const InnerTable& table, double alpha, double r, double rho) {
  const double pre = (1.0 - r * r) * (1.0 - rho * rho);
  auto f = [&](double th) {
    const double q2 = r * r + rho * rho - 2.0 * r * rho * std::cos(th);
    if (q2 <= 0.0) return 0.0;
    return std::pow(q2, 0.5 * (alpha - 2.0)) * table(pre / q2);
  };
  quad::Options qopt{1e-8, 1e-13, 36};
  const double split = std::min(0.5, kPi);
  return (quad::integrate_tanh_sinh(f, 0.0, split, qopt) +
          quad::integrate(f, split, kPi, qopt)) /
         kPi;
}

// weights of the integral operator row at x against piecewise-linear hats on
// the mesh: row[j] multiplies F(u_j). Panels near the kernel singularity at
// y = x (and the kinked outermost panels) get tanh-sinh, the rest a fixed
// Gauss rule with one kernel evaluation per node for both hats.
std::vector<double> operator_row(const InnerTable& table, double alpha, int d,
                                 double c_green, double x,
                                 const std::vector<double>& nodes) {
  const int n = static_cast<int>(nodes.size());
  std::vector<double> row(n, 0.0);
  quad::Options qopt{1e-7, 1e-14, 40};
  auto kernel = [&](double y) -> double {
    if (d == 1) return green_1d_raw(table, alpha, x, y);
    return green_2d_angular_raw(table, alpha, x, std::fabs(y)) * 2.0 * kPi *
           std::fabs(y);  // area element rho dtheta drho
  };
  for (int k = 0; k + 1 < n; ++k) {
    const double yl = nodes[k], yr = nodes[k + 1];
    if (yr <= yl) continue;
    const double width = yr - yl;
    const bool near_sing = x >= yl - width && x <= yr + width;
    const bool rim = k < 2 || k + 3 > n;
    if (near_sing || rim) {
      auto left = [&](double y) { return kernel(y) * (yr - y) / width; };
      auto right = [&](double y) { return kernel(y) * (y - yl) / width; };
      row[k] += c_green * quad::integrate_tanh_sinh(left, yl, yr, qopt);
      row[k + 1] += c_green * quad::integrate_tanh_sinh(right, yl, yr, qopt);
    } else {
      const double c = 0.5 * (yl + yr), h = 0.5 * width;
      double acc_l = 0.0, acc_r = 0.0;
      for (int j = 0; j < 8; ++j) {
        for (double sgn : {-1.0, 1.0}) {
          const double y = c + sgn * h * quad::detail::kXgl16[j];
          const double kv = quad::detail::kWgl16[j] * kernel(y);
          acc_l += kv * (yr - y);
          acc_r += kv * (y - yl);
        }
      }
      row[k] += c_green * acc_l * h / width;
      row[k + 1] += c_green * acc_r * h / width;
    }
  }
  return row;
}

std::vector<std::vector<double>> assemble_matrix(const InnerTable& table, double alpha,
                                                 int d, double c_green,
                                                 const std::vector<double>& nodes) {
  const int n = static_cast<int>(nodes.size());
  std::vector<std::vector<double>> rows(n);
  parallel_for(static_cast<std::size_t>(n), [&](std::size_t i) {
    const double x = nodes[i];
    if (std::fabs(x) >= 1.0) {
      rows[i].assign(n, 0.0);  // boundary nodes: u = 0 there
      return;
    }
    rows[i] = operator_row(table, alpha, d, c_green, x, nodes);
  });
  return rows;
}

}  // namespace

BallSolution solve_ball_steady(const BallNonlinearity& F, double alpha, int d,
                               int mesh_points) {
  check_params(alpha, d);
  if (d > 2) throw std::domain_error("solve_ball_steady: solver covers d in {1,2}");
  if (!(F.offset >= 0.0) || !(F.slope >= 0.0) || !(F.offset + F.slope > 0.0))
    throw std::invalid_argument(
        "solve_ball_steady: F must be non-negative, non-decreasing, not identically zero");
  const int m = mesh_points > 0 ? mesh_points : (d == 1 ? 256 : 96);

  const BallKernelParams params = make_ball_params(alpha, d);
  const auto& table = inner_table(alpha, d);
  const std::vector<double> nodes = d == 1 ? mesh_1d(m) : mesh_radial(m);
  const auto W = assemble_matrix(table, alpha, d, params.c_green, nodes);

  double sup_row = 0.0;
  for (const auto& row : W) {
    double s = 0.0;
    for (double w : row) s += w;
    sup_row = std::max(sup_row, s);
  }
  const double contraction = F.lipschitz() * sup_row;
  if (contraction >= 1.0) {
    std::ostringstream msg;
    msg << "solve_ball_steady: contraction condition violated, lipschitz(F) * sup_x Int G = "
        << contraction << " >= 1";
    throw std::runtime_error(msg.str());
  }

  const int n = static_cast<int>(nodes.size());
  std::vector<double> u(n, 0.0), fu(n, 0.0), next(n, 0.0);
  int iters = 0;
  for (; iters < 500; ++iters) {
    for (int j = 0; j < n; ++j) fu[j] = F(u[j]);
    double change = 0.0;
    for (int i = 0; i < n; ++i) {
      double s = 0.0;
      const auto& row = W[i];
      for (int j = 0; j < n; ++j) s += row[j] * fu[j];
      change = std::max(change, std::fabs(s - u[i]));
      next[i] = s;
    }
    u.swap(next);
    if (change < 1e-10) break;
  }

  BallSolution sol;
  sol.alpha = alpha;
  sol.d = d;
  sol.F = F;
  sol.nodes = nodes;
  sol.values = u;
  sol.iterations = iters + 1;
  sol.sup_exit_time = sup_row;

  if (d == 1) {
    double defect = 0.0;
    for (int j = 0; j <= m; ++j)
      defect = std::max(defect, std::fabs(u[j] - u[m - j]));
    sol.symmetry_defect = defect;
  } else {
    // rotational-invariance defect of the discretized operator: evaluate the
    // full 2-d integral at a few orbit points and compare across directions
    auto u_of = [&](double rho) {
      const auto it = std::upper_bound(nodes.begin(), nodes.end(), rho);
      if (it == nodes.begin()) return u.front();
      if (it == nodes.end()) return 0.0;
      const std::size_t hi_i = it - nodes.begin();
      const double t = (rho - nodes[hi_i - 1]) / (nodes[hi_i] - nodes[hi_i - 1]);
      return (1.0 - t) * u[hi_i - 1] + t * u[hi_i];
    };
    double defect = 0.0;
    for (double r : {0.25, 0.5, 0.75}) {
      double lo = std::numeric_limits<double>::infinity(), hi = -lo;
      for (int k = 0; k < 8; ++k) {
        const double th = 2.0 * kPi * k / 8.0 + 0.1;
        const double x0 = r * std::cos(th), x1 = r * std::sin(th);
        const double wx = 1.0 - r * r;
        // polar coordinates about x itself: the kernel is radially integrable
        // at 0, and the angular range is clipped to the inside-ball arc
        // (psi measured from the outward direction of x)
        auto radial = [&](double s) {
          auto ang = [&](double psi) {
            const double cx = std::cos(th), sx = std::sin(th);
            const double y0 = x0 + s * (cx * std::cos(psi) - sx * std::sin(psi));
            const double y1 = x1 + s * (sx * std::cos(psi) + cx * std::sin(psi));
            const double ry2 = y0 * y0 + y1 * y1;
            if (ry2 >= 1.0) return 0.0;
            const double w = wx * (1.0 - ry2) / (s * s);
            return table(w) * F(u_of(std::sqrt(ry2)));
          };
          const double cos_star = (1.0 - r * r - s * s) / (2.0 * r * s);
          double psi_star = 0.0;  // full circle inside when r + s <= 1
          if (cos_star < 1.0)
            psi_star = std::acos(std::max(-1.0, cos_star));
          // integrand is even in psi about pi
          const double arc =
              2.0 * quad::integrate_tanh_sinh(ang, psi_star, kPi, {1e-7, 1e-13, 34});
          return std::pow(s, alpha - 1.0) * arc;
        };
        const double v = params.c_green *
                         (quad::integrate_tanh_sinh(radial, 0.0, 1.0 - r, {1e-7, 1e-13, 34}) +
                          quad::integrate_tanh_sinh(radial, 1.0 - r, 1.0 + r, {1e-7, 1e-13, 34}));
        lo = std::min(lo, v);
        hi = std::max(hi, v);
      }
      defect = std::max(defect, hi - lo);
    }
    sol.symmetry_defect = defect;
  }

  sol.boundary_exponent = boundary_exponent(sol);
  return sol;
}

double eval_ball_solution(const BallSolution& sol, double r) {
  if (std::fabs(r) >= 1.0) return 0.0;
  const BallKernelParams params = make_ball_params(sol.alpha, sol.d);
  const auto& table = inner_table(sol.alpha, sol.d);
  const auto row = operator_row(table, sol.alpha, sol.d, params.c_green, r, sol.nodes);
  double s = 0.0;
  for (std::size_t j = 0; j < row.size(); ++j) s += row[j] * sol.F(sol.values[j]);
  return s;
}

double boundary_exponent(const BallSolution& sol) {
  std::vector<double> lx, ly;
  for (int k = 0; k < 12; ++k) {
    const double eps = 1e-3 * std::pow(100.0, k / 11.0);
    const double v = eval_ball_solution(sol, 1.0 - eps);
    if (!(v > 0.0))
      throw std::invalid_argument("boundary_exponent: non-positive value in the fit window");
    lx.push_back(std::log(eps));
    ly.push_back(std::log(v));
  }
  const std::size_t n = lx.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sx += lx[i];
    sy += ly[i];
    sxx += lx[i] * lx[i];
    sxy += lx[i] * ly[i];
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

// ---------------------------------------------------------------------------
// moving planes
// ---------------------------------------------------------------------------

SymmetryReport symmetry_diagnostic(const std::function<double(const Point&)>& u, int d,
                                   const Point& direction, int n_grid, double tol) {
  if (d < 1 || d > 2) throw std::domain_error("symmetry_diagnostic: d must be 1 or 2");
  // rotate `direction` onto the first axis
  double rot_c = 1.0, rot_s = 0.0;
  if (d == 1) {
    rot_c = direction[0] >= 0.0 ? 1.0 : -1.0;
  } else {
    const double nrm = std::hypot(direction[0], direction[1]);
    if (!(nrm > 0.0)) throw std::invalid_argument("symmetry_diagnostic: zero direction");
    rot_c = direction[0] / nrm;
    rot_s = direction[1] / nrm;
  }
  auto v = [&](double x1, double x2) {
    // v(x) = u(R x) with R e_1 = direction
    if (d == 1) return u(Point{rot_c * x1, 0.0, 0.0});
    return u(Point{rot_c * x1 - rot_s * x2, rot_s * x1 + rot_c * x2, 0.0});
  };

  const int n = n_grid;
  const double h = 2.0 / n;
  // sampled values on the uniform grid over [-1,1]^d
  std::vector<double> grid((n + 1) * (d == 2 ? (n + 1) : 1));
  const int n2 = d == 2 ? n + 1 : 1;
  for (int i = 0; i <= n; ++i) {
    const double x1 = -1.0 + i * h;
    for (int j = 0; j < n2; ++j) {
      const double x2 = d == 2 ? -1.0 + j * h : 0.0;
      grid[i * n2 + j] = v(x1, x2);
    }
  }
  auto gv = [&](int i, int j) { return grid[i * n2 + (d == 2 ? j : 0)]; };

  SymmetryReport rep;
  rep.lambda_sup = -1.0;
  const double deriv_tol = 4.0 * h;  // derivative condition slack, grid-tied

  for (int li = 1; 2 * li <= n; ++li) {  // lambda = -1 + li*h, up to 0 inclusive
    const double lambda = -1.0 + li * h;
    double min_w = std::numeric_limits<double>::infinity();
    SymmetryViolation worst{lambda, {0, 0, 0}, 0.0};
    bool deriv_ok = true;
    for (int i = 0; i < li; ++i) {  // x1 = -1 + i*h < lambda
      const int ir = 2 * li - i;    // reflected index
      if (ir > n) continue;
      const double x1 = -1.0 + i * h;
      for (int j = 0; j < n2; ++j) {
        const double x2 = d == 2 ? -1.0 + j * h : 0.0;
        if (x1 * x1 + x2 * x2 >= 1.0) continue;
        const double w = gv(ir, j) - gv(i, j);
        if (w < min_w) {
          min_w = w;
          worst = {lambda, {x1, x2, 0.0}, w};
        }
      }
    }
    // derivative condition on the plane x1 = lambda (central differences)
    for (int j = 0; j < n2 && li >= 1 && li + 1 <= n; ++j) {
      const double x2 = d == 2 ? -1.0 + j * h : 0.0;
      if (lambda * lambda + x2 * x2 >= 1.0) continue;
      const double slope = (gv(li + 1, j) - gv(li - 1, j)) / (2.0 * h);
      if (slope < -deriv_tol) {
        deriv_ok = false;
        break;
      }
    }
    if (!std::isfinite(min_w)) min_w = 0.0;  // empty cap
    rep.sweep.push_back({lambda, min_w});
    if (min_w >= -tol && deriv_ok) {
      rep.lambda_sup = lambda;
    } else {
      if (min_w < -tol) rep.violations.push_back(worst);
      if (!deriv_ok) rep.derivative_condition_ok = false;
      break;
    }
  }
  return rep;
}

}  // namespace fujita::ball
