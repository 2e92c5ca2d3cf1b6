#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <vector>

#include "fujita/quadrature.hpp"
#include "fujita/rng.hpp"
#include "fujita/stable_process.hpp"
#include "support/stats.hpp"

using namespace fujita;
constexpr double kPi = std::numbers::pi;

namespace {

std::vector<double> draws_1d(double alpha, double h, int n, std::uint64_t seed) {
  Rng rng(seed, 0);
  std::vector<double> out(n);
  for (auto& x : out) x = stable::sample_increment(alpha, h, 1, rng)[0];
  return out;
}

double normal_cdf(double x, double sd) { return 0.5 * std::erfc(-x / (sd * std::sqrt(2.0))); }

}  // namespace

TEST_CASE("alpha=2 increments have variance 2h") {
  const int n = 100000;
  auto xs = draws_1d(2.0, 1.0, n, 11);
  const double var = teststats::variance(xs);
  // fourth moment of N(0,2) is 12; se of the sample variance ~ sqrt((12-4)/n)
  const double se = std::sqrt(8.0 / n);
  CHECK(std::fabs(var - 2.0) < 3.0 * se);
  CHECK(std::fabs(teststats::mean(xs)) < 3.0 * std::sqrt(2.0 / n));
}

TEST_CASE("alpha=1 increments are Cauchy (KS at the 1% level)") {
  const int n = 100000;
  auto xs = draws_1d(1.0, 1.0, n, 12);
  auto cdf = [](double x) { return 0.5 + std::atan(x) / kPi; };
  CHECK(teststats::ks_statistic(xs, cdf) < teststats::ks_critical_1pct(n));
}

TEST_CASE("sign symmetry of the increment law") {
  const int n = 50000;
  auto xs = draws_1d(0.7, 1.0, n, 13);
  auto ys = draws_1d(0.7, 1.0, n, 14);
  for (auto& y : ys) y = -y;
  CHECK(teststats::ks_two_sample(xs, ys) < teststats::ks_two_sample_critical_1pct(n, n));
}

TEST_CASE("self-similarity: X_h ~ h^{1/alpha} X_1") {
  const int n = 50000;
  for (double alpha : {0.5, 1.5}) {
    auto xs = draws_1d(alpha, 0.25, n, 15);
    auto ys = draws_1d(alpha, 1.0, n, 16);
    const double scale = std::pow(0.25, 1.0 / alpha);
    for (auto& y : ys) y *= scale;
    CHECK(teststats::ks_two_sample(xs, ys) < teststats::ks_two_sample_critical_1pct(n, n));
  }
}

TEST_CASE("subordinator matches the CMS route in one dimension") {
  // sqrt(2 S) Z with S an alpha/2 subordinator must reproduce the 1-d law
  const int n = 50000;
  const double alpha = 1.2;
  Rng rng(17, 0);
  std::vector<double> sub(n);
  for (auto& x : sub) {
    const double s = stable::sample_subordinator(0.5 * alpha, rng);
    x = std::sqrt(2.0 * s) * rng.gaussian();
  }
  auto cms = draws_1d(alpha, 1.0, n, 18);
  CHECK(teststats::ks_two_sample(sub, cms) < teststats::ks_two_sample_critical_1pct(n, n));
}

TEST_CASE("simulate_path contracts") {
  std::vector<double> times = {0.0};
  auto p = stable::simulate_path(1.0, 1, {0.5, 0, 0}, times, 3);
  CHECK(p.positions.size() == 1);
  CHECK(p.positions[0][0] == 0.5);

  std::vector<double> times2 = {0.0, 0.5, 1.0, 2.0};
  auto a = stable::simulate_path(1.5, 2, {0, 0, 0}, times2, 4);
  auto b = stable::simulate_path(1.5, 2, {0, 0, 0}, times2, 4);
  for (std::size_t i = 0; i < times2.size(); ++i) {
    CHECK(a.positions[i][0] == b.positions[i][0]);
    CHECK(a.positions[i][1] == b.positions[i][1]);
  }
  CHECK_THROWS_AS(stable::simulate_path(1.0, 1, {0, 0, 0}, {0.0, 1.0, 1.0}, 5),
                  std::invalid_argument);
  CHECK_THROWS_AS(stable::simulate_path(1.0, 1, {0, 0, 0}, {0.5, 1.0}, 5),
                  std::invalid_argument);
}

TEST_CASE("alpha=2 quadratic variation over [0,1] is 2d") {
  const int steps = 10000;
  std::vector<double> times(steps + 1);
  for (int i = 0; i <= steps; ++i) times[i] = static_cast<double>(i) / steps;
  auto p = stable::simulate_path(2.0, 1, {0, 0, 0}, times, 6);
  double qv = 0.0;
  for (int i = 1; i <= steps; ++i) {
    const double inc = p.positions[i][0] - p.positions[i - 1][0];
    qv += inc * inc;
  }
  CHECK(qv == doctest::Approx(2.0).epsilon(0.05));
}

TEST_CASE("transition density closed forms") {
  // Cauchy at the origin
  CHECK(stable::transition_density_radial(1.0, 1, 1.0, 0.0) ==
        doctest::Approx(1.0 / kPi).epsilon(1e-12));
  // heat kernel at the origin
  CHECK(stable::transition_density_radial(2.0, 1, 1.0, 0.0) ==
        doctest::Approx(std::pow(4.0 * kPi, -0.5)).epsilon(1e-12));
  CHECK_THROWS_AS(stable::transition_density_radial(1.0, 1, 0.0, 0.0), std::domain_error);

  // symmetry in the two space arguments
  Rng rng(19, 0);
  for (int k = 0; k < 5; ++k) {
    stable::Point x{rng.uniform(-2, 2), rng.uniform(-2, 2), 0};
    stable::Point y{rng.uniform(-2, 2), rng.uniform(-2, 2), 0};
    CHECK(stable::transition_density(0.8, 2, 0.7, x, y) ==
          doctest::Approx(stable::transition_density(0.8, 2, 0.7, y, x)).epsilon(1e-12));
  }
}

TEST_CASE("Fourier inversion reproduces the closed forms") {
  // the generic quadrature branch, probed at alpha = 1 +- 1e-9 and 2 - 1e-9,
  // must land on the Cauchy and heat kernels
  for (int d : {1, 2, 3}) {
    for (double r : {0.0, 0.3, 0.5, 1.0, 1.7, 2.5}) {
      const double cauchy = stable::transition_density_radial(1.0, d, 1.0, r);
      CHECK(stable::transition_density_radial(1.0 + 1e-9, d, 1.0, r) ==
            doctest::Approx(cauchy).epsilon(1e-6));
      CHECK(stable::transition_density_radial(1.0 - 1e-9, d, 1.0, r) ==
            doctest::Approx(cauchy).epsilon(1e-6));
      const double heat = stable::transition_density_radial(2.0, d, 1.0, r);
      CHECK(stable::transition_density_radial(2.0 - 1e-9, d, 1.0, r) ==
            doctest::Approx(heat).epsilon(1e-6));
    }
  }
}

TEST_CASE("Chapman-Kolmogorov at generic alpha") {
  const double alpha = 0.75, s = 0.4, t = 0.6;
  for (double x : {0.0, 0.5, 1.0, -0.7, 2.0}) {
    auto f = [&](double z) {
      return stable::transition_density_radial(alpha, 1, s, x - z) *
             stable::transition_density_radial(alpha, 1, t, z);
    };
    // heavy tails: integrate the core adaptively, tails by log substitution
    quad::Options qopt{1e-8, 1e-12, 44};
    double conv = quad::integrate(f, -30.0, 30.0, qopt);
    auto tail = [&](double u) {
      const double z = 30.0 * std::exp(u);
      return (f(z) + f(-z)) * z;
    };
    conv += quad::integrate(tail, 0.0, 8.0, qopt);
    const double direct = stable::transition_density_radial(alpha, 1, s + t, x);
    CHECK(conv == doctest::Approx(direct).epsilon(1e-4));
  }
}

TEST_CASE("sampler matches inverted density (chi-square at 1%)") {
  const int n = 100000;
  for (double alpha : {0.5, 1.0, 1.5, 2.0}) {
    auto xs = draws_1d(alpha, 1.0, n, 20 + static_cast<int>(10 * alpha));
    std::vector<double> edges;
    for (double e = -4.0; e <= 4.0 + 1e-12; e += 0.5) edges.push_back(e);
    std::vector<double> probs;
    for (std::size_t k = 0; k + 1 < edges.size(); ++k) {
      auto pdf = [&](double x) { return stable::transition_density_radial(alpha, 1, 1.0, x); };
      probs.push_back(quad::integrate(pdf, edges[k], edges[k + 1], {1e-9, 0.0, 40}));
    }
    const auto res = teststats::chi2_against_probabilities(xs, edges, probs);
    CHECK(res.statistic < res.critical_1pct);
  }
}

TEST_CASE("domain errors") {
  Rng rng(1, 0);
  CHECK_THROWS_AS(stable::sample_increment(0.0, 1.0, 1, rng), std::domain_error);
  CHECK_THROWS_AS(stable::sample_increment(2.5, 1.0, 1, rng), std::domain_error);
  CHECK_THROWS_AS(stable::sample_increment(1.0, 0.0, 1, rng), std::domain_error);
}
