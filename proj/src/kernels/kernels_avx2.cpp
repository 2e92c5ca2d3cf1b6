#include "fujita/kernels.hpp"

#ifdef FUJITA_HAVE_AVX2_BUILD

#include <immintrin.h>

#include <cmath>
#include <limits>

// Compiled with -mavx2 -mfma; only dispatched to after a CPUID check.

namespace fujita::kernels::avx2 {

namespace {

inline double hmax(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  __m128d m = _mm_max_pd(lo, hi);
  m = _mm_max_sd(m, _mm_unpackhi_pd(m, m));
  return _mm_cvtsd_f64(m);
}

inline double hmin(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  __m128d m = _mm_min_pd(lo, hi);
  m = _mm_min_sd(m, _mm_unpackhi_pd(m, m));
  return _mm_cvtsd_f64(m);
}

const __m256d kAbsMask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));

}  // namespace

double sup_abs(const double* x, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    acc = _mm256_max_pd(acc, _mm256_and_pd(kAbsMask, _mm256_loadu_pd(x + i)));
  double m = hmax(acc);
  for (; i < n; ++i) m = std::max(m, std::fabs(x[i]));
  return m;
}

double min_value(const double* x, std::size_t n) {
  __m256d acc = _mm256_set1_pd(std::numeric_limits<double>::infinity());
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) acc = _mm256_min_pd(acc, _mm256_loadu_pd(x + i));
  double m = hmin(acc);
  for (; i < n; ++i) m = std::min(m, x[i]);
  return m;
}

double max_diff(const double* a, const double* b, std::size_t n) {
  __m256d acc = _mm256_set1_pd(-std::numeric_limits<double>::infinity());
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    acc = _mm256_max_pd(acc, _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
  double m = hmax(acc);
  for (; i < n; ++i) m = std::max(m, a[i] - b[i]);
  return m;
}

void axpy_clamp(double* u, const double* g, double dt, std::size_t n) {
  const __m256d vdt = _mm256_set1_pd(dt);
  const __m256d zero = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d v = _mm256_fmadd_pd(vdt, _mm256_loadu_pd(g + i), _mm256_loadu_pd(u + i));
    _mm256_storeu_pd(u + i, _mm256_max_pd(zero, v));
  }
  for (; i < n; ++i) u[i] = std::max(0.0, std::fma(dt, g[i], u[i]));
}

void power_law(double* dst, const double* x, double c, double p, std::size_t n) {
  const __m256d vc = _mm256_set1_pd(c);
  std::size_t i = 0;
  if (p == 1.0) {
    for (; i + 4 <= n; i += 4)
      _mm256_storeu_pd(dst + i, _mm256_mul_pd(vc, _mm256_loadu_pd(x + i)));
    for (; i < n; ++i) dst[i] = c * x[i];
  } else if (p == 1.25) {
    for (; i + 4 <= n; i += 4) {
      __m256d v = _mm256_loadu_pd(x + i);
      __m256d r = _mm256_mul_pd(v, _mm256_sqrt_pd(_mm256_sqrt_pd(v)));
      _mm256_storeu_pd(dst + i, _mm256_mul_pd(vc, r));
    }
    for (; i < n; ++i) dst[i] = c * (x[i] * std::sqrt(std::sqrt(x[i])));
  } else if (p == 1.5) {
    for (; i + 4 <= n; i += 4) {
      __m256d v = _mm256_loadu_pd(x + i);
      _mm256_storeu_pd(dst + i, _mm256_mul_pd(vc, _mm256_mul_pd(v, _mm256_sqrt_pd(v))));
    }
    for (; i < n; ++i) dst[i] = c * (x[i] * std::sqrt(x[i]));
  } else if (p == 2.0) {
    for (; i + 4 <= n; i += 4) {
      __m256d v = _mm256_loadu_pd(x + i);
      _mm256_storeu_pd(dst + i, _mm256_mul_pd(vc, _mm256_mul_pd(v, v)));
    }
    for (; i < n; ++i) dst[i] = c * (x[i] * x[i]);
  } else if (p == 3.0) {
    for (; i + 4 <= n; i += 4) {
      __m256d v = _mm256_loadu_pd(x + i);
      _mm256_storeu_pd(dst + i, _mm256_mul_pd(vc, _mm256_mul_pd(_mm256_mul_pd(v, v), v)));
    }
    for (; i < n; ++i) dst[i] = c * (x[i] * x[i] * x[i]);
  } else {
    scalar::power_law(dst, x, c, p, n);
  }
}

void cmul_real(double* reim, const double* m, std::size_t n_complex) {
  std::size_t k = 0;
  for (; k + 2 <= n_complex; k += 2) {
    // duplicate (m0, m1) -> (m0, m0, m1, m1) to match interleaved re/im
    __m128d mm = _mm_loadu_pd(m + k);
    __m256d md = _mm256_permute4x64_pd(_mm256_castpd128_pd256(mm), 0x50);
    __m256d v = _mm256_loadu_pd(reim + 2 * k);
    _mm256_storeu_pd(reim + 2 * k, _mm256_mul_pd(v, md));
  }
  for (; k < n_complex; ++k) {
    reim[2 * k] *= m[k];
    reim[2 * k + 1] *= m[k];
  }
}

}  // namespace fujita::kernels::avx2

#endif  // FUJITA_HAVE_AVX2_BUILD
