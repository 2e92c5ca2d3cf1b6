#pragma once

// Test-side statistics oracles: Kolmogorov-Smirnov one- and two-sample
// statistics, chi-square goodness of fit against a density, and a tiny
// linear regression. Kept independent of the library under test.

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

namespace teststats {

// one-sample KS statistic against a CDF
inline double ks_statistic(std::vector<double> samples,
                           const std::function<double(double)>& cdf) {
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double f = cdf(samples[i]);
    d = std::max(d, std::fabs(f - i / n));
    d = std::max(d, std::fabs((i + 1) / n - f));
  }
  return d;
}

// asymptotic 1% critical value for the one-sample KS statistic
inline double ks_critical_1pct(std::size_t n) { return 1.6276 / std::sqrt(double(n)); }

// two-sample KS statistic
inline double ks_two_sample(std::vector<double> a, std::vector<double> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  double d = 0.0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] <= b[j])
      ++i;
    else
      ++j;
    d = std::max(d, std::fabs(double(i) / a.size() - double(j) / b.size()));
  }
  return d;
}

// 1% critical value for the two-sample statistic
inline double ks_two_sample_critical_1pct(std::size_t n, std::size_t m) {
  return 1.6276 * std::sqrt((n + m) / double(n) / double(m));
}

// chi-square statistic of samples against expected bin probabilities
struct Chi2Result {
  double statistic = 0.0;
  int dof = 0;
  double critical_1pct = 0.0;  // Wilson-Hilferty approximation
};

inline Chi2Result chi2_against_probabilities(const std::vector<double>& samples,
                                             const std::vector<double>& edges,
                                             const std::vector<double>& probs) {
  if (edges.size() != probs.size() + 1) throw std::invalid_argument("chi2: edge/prob mismatch");
  std::vector<double> counts(probs.size(), 0.0);
  for (double s : samples) {
    const auto it = std::upper_bound(edges.begin(), edges.end(), s);
    if (it == edges.begin() || it == edges.end()) continue;
    counts[(it - edges.begin()) - 1] += 1.0;
  }
  Chi2Result res;
  // bin counts are Binomial(n, p_k) against the full sample size
  const double n_total = static_cast<double>(samples.size());
  for (std::size_t k = 0; k < probs.size(); ++k) {
    const double expect = probs[k] * n_total;
    if (expect < 5.0) continue;  // sparse bins folded out
    res.statistic += (counts[k] - expect) * (counts[k] - expect) / expect;
    ++res.dof;
  }
  res.dof = std::max(1, res.dof - 1);
  const double k = res.dof;
  const double z = 2.3263;  // 99th percentile of the standard normal
  const double h = 2.0 / (9.0 * k);
  res.critical_1pct = k * std::pow(1.0 - h + z * std::sqrt(h), 3.0);
  return res;
}

inline void linear_regression(const std::vector<double>& x, const std::vector<double>& y,
                              double& slope, double& intercept) {
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  intercept = (sy - slope * sx) / n;
}

inline double mean(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s / v.size();
}

inline double variance(const std::vector<double>& v) {
  const double m = mean(v);
  double s = 0.0;
  for (double x : v) s += (x - m) * (x - m);
  return s / (v.size() - 1.0);
}

}  // namespace teststats
