#include "fujita/kernels.hpp"

#include <cmath>
#include <limits>

namespace fujita::kernels::scalar {

double sup_abs(const double* x, std::size_t n) {
  double m = 0.0;
  for (std::size_t i = 0; i < n; ++i) m = std::max(m, std::fabs(x[i]));
  return m;
}

double min_value(const double* x, std::size_t n) {
  double m = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) m = std::min(m, x[i]);
  return m;
}

double max_diff(const double* a, const double* b, std::size_t n) {
  double m = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) m = std::max(m, a[i] - b[i]);
  return m;
}

void axpy_clamp(double* u, const double* g, double dt, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) u[i] = std::max(0.0, std::fma(dt, g[i], u[i]));
}

bool power_law_fast_path(double p) {
  return p == 1.0 || p == 1.25 || p == 1.5 || p == 2.0 || p == 3.0;
}

void power_law(double* dst, const double* x, double c, double p, std::size_t n) {
  if (p == 1.0) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = c * x[i];
  } else if (p == 1.25) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = c * (x[i] * std::sqrt(std::sqrt(x[i])));
  } else if (p == 1.5) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = c * (x[i] * std::sqrt(x[i]));
  } else if (p == 2.0) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = c * (x[i] * x[i]);
  } else if (p == 3.0) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = c * (x[i] * x[i] * x[i]);
  } else {
    for (std::size_t i = 0; i < n; ++i) dst[i] = x[i] > 0.0 ? c * std::pow(x[i], p) : 0.0;
  }
}

void cmul_real(double* reim, const double* m, std::size_t n_complex) {
  for (std::size_t k = 0; k < n_complex; ++k) {
    reim[2 * k] *= m[k];
    reim[2 * k + 1] *= m[k];
  }
}

}  // namespace fujita::kernels::scalar
