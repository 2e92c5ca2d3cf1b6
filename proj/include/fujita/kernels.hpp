#pragma once

// Data-parallel inner loops of the grid solver: scalar reference kernels plus
// AVX2 variants selected at runtime. Both backends evaluate the same floating
// point expression (explicit fma / sqrt chains), so for the vectorized fast
// paths the results are bit-identical; the equivalence tests assert that.

#include <cstddef>

namespace fujita::kernels {

enum class Backend { scalar, avx2 };

// Active backend: FUJITA_SIMD={auto,scalar,avx2} env override, otherwise
// CPUID detection (AVX2+FMA). Falls back to scalar on non-x86 builds.
Backend active_backend();
const char* backend_name();
void force_backend(Backend b);  // test hook

// max_i |x_i|
double sup_abs(const double* x, std::size_t n);

// min_i x_i
double min_value(const double* x, std::size_t n);

// max_i (a_i - b_i); -inf for n == 0
double max_diff(const double* a, const double* b, std::size_t n);

// u_i <- max(0, fma(dt, g_i, u_i))
void axpy_clamp(double* u, const double* g, double dt, std::size_t n);

// dst_i <- c * x_i^p for x_i >= 0. Vectorized for p in {1, 1.25, 1.5, 2, 3};
// other exponents take the scalar pow path on both backends.
void power_law(double* dst, const double* x, double c, double p, std::size_t n);
bool power_law_is_vectorized(double p);

// Interleaved complex spectrum scaled by a real multiplier per mode:
// (re_k, im_k) <- (m_k * re_k, m_k * im_k)
void cmul_real(double* reim, const double* m, std::size_t n_complex);

namespace scalar {
double sup_abs(const double* x, std::size_t n);
double min_value(const double* x, std::size_t n);
double max_diff(const double* a, const double* b, std::size_t n);
void axpy_clamp(double* u, const double* g, double dt, std::size_t n);
void power_law(double* dst, const double* x, double c, double p, std::size_t n);
void cmul_real(double* reim, const double* m, std::size_t n_complex);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define FUJITA_HAVE_AVX2_BUILD 1
namespace avx2 {
double sup_abs(const double* x, std::size_t n);
double min_value(const double* x, std::size_t n);
double max_diff(const double* a, const double* b, std::size_t n);
void axpy_clamp(double* u, const double* g, double dt, std::size_t n);
void power_law(double* dst, const double* x, double c, double p, std::size_t n);
void cmul_real(double* reim, const double* m, std::size_t n_complex);
}  // namespace avx2
#endif

}  // namespace fujita::kernels
