#include "fujita/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>

namespace fujita::kernels {

namespace {

Backend detect() {
  const char* env = std::getenv("FUJITA_SIMD");
  if (env != nullptr) {
    if (std::strcmp(env, "scalar") == 0) return Backend::scalar;
#ifdef FUJITA_HAVE_AVX2_BUILD
    if (std::strcmp(env, "avx2") == 0) return Backend::avx2;
#endif
  }
#ifdef FUJITA_HAVE_AVX2_BUILD
  if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) return Backend::avx2;
#endif
  return Backend::scalar;
}

std::atomic<Backend> g_backend{detect()};

}  // namespace

Backend active_backend() { return g_backend.load(std::memory_order_relaxed); }

void force_backend(Backend b) { g_backend.store(b, std::memory_order_relaxed); }

const char* backend_name() {
  return active_backend() == Backend::scalar ? "scalar" : "avx2";
}

bool power_law_is_vectorized(double p) {
  return p == 1.0 || p == 1.25 || p == 1.5 || p == 2.0 || p == 3.0;
}

#ifdef FUJITA_HAVE_AVX2_BUILD
#define FUJITA_DISPATCH(fn, ...) \
  return active_backend() == Backend::avx2 ? avx2::fn(__VA_ARGS__) : scalar::fn(__VA_ARGS__)
#else
#define FUJITA_DISPATCH(fn, ...) return scalar::fn(__VA_ARGS__)
#endif

double sup_abs(const double* x, std::size_t n) { FUJITA_DISPATCH(sup_abs, x, n); }
double min_value(const double* x, std::size_t n) { FUJITA_DISPATCH(min_value, x, n); }
double max_diff(const double* a, const double* b, std::size_t n) {
  FUJITA_DISPATCH(max_diff, a, b, n);
}
void axpy_clamp(double* u, const double* g, double dt, std::size_t n) {
  FUJITA_DISPATCH(axpy_clamp, u, g, dt, n);
}
void power_law(double* dst, const double* x, double c, double p, std::size_t n) {
  FUJITA_DISPATCH(power_law, dst, x, c, p, n);
}
void cmul_real(double* reim, const double* m, std::size_t n_complex) {
  FUJITA_DISPATCH(cmul_real, reim, m, n_complex);
}

#undef FUJITA_DISPATCH

}  // namespace fujita::kernels
