#include "fujita/grid.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "fujita/kernels.hpp"

namespace fujita::grid {

namespace {

std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

// One r2c/c2r plan pair per shape; cached per thread (FFTW plan execution on
// its own buffers is not concurrently reusable, planning itself is guarded).
class FftPlan {
 public:
  FftPlan(int d, int n) : d_(d), n_(n) {
    int dims[3] = {n, n, n};
    std::size_t real_n = 1, spec_n = 1;
    for (int j = 0; j < d; ++j) real_n *= n;
    for (int j = 0; j < d - 1; ++j) spec_n *= n;
    spec_n *= n / 2 + 1;
    real_ = static_cast<double*>(fftw_malloc(sizeof(double) * real_n));
    spec_ = static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * spec_n));
    real_size_ = real_n;
    spec_size_ = spec_n;
    std::lock_guard<std::mutex> lock(planner_mutex());
    fwd_ = fftw_plan_dft_r2c(d, dims, real_, spec_, FFTW_ESTIMATE);
    bwd_ = fftw_plan_dft_c2r(d, dims, spec_, real_, FFTW_ESTIMATE);
  }

  ~FftPlan() {
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_destroy_plan(fwd_);
    fftw_destroy_plan(bwd_);
    fftw_free(real_);
    fftw_free(spec_);
  }

  FftPlan(const FftPlan&) = delete;
  FftPlan& operator=(const FftPlan&) = delete;

  std::size_t real_size() const { return real_size_; }
  std::size_t spec_size() const { return spec_size_; }
  double* real() { return real_; }
  double* spec_reim() { return reinterpret_cast<double*>(spec_); }
  void forward() { fftw_execute(fwd_); }
  void backward() { fftw_execute(bwd_); }
  int d() const { return d_; }
  int n() const { return n_; }

 private:
  int d_, n_;
  std::size_t real_size_ = 0, spec_size_ = 0;
  double* real_ = nullptr;
  fftw_complex* spec_ = nullptr;
  fftw_plan fwd_ = nullptr, bwd_ = nullptr;
};

FftPlan& plan_for(int d, int n) {
  thread_local std::map<std::pair<int, int>, std::unique_ptr<FftPlan>> cache;
  auto& slot = cache[{d, n}];
  if (!slot) slot = std::make_unique<FftPlan>(d, n);
  return *slot;
}

// |k| 2 pi / L per r2c mode, shape-dependent; cached per thread.
const std::vector<double>& wavenumbers(int d, int n, double L) {
  thread_local std::map<std::tuple<int, int, double>, std::vector<double>> cache;
  auto& slot = cache[{d, n, L}];
  if (!slot.empty()) return slot;
  const int nh = n / 2 + 1;
  std::size_t total = nh;
  for (int j = 0; j < d - 1; ++j) total *= n;
  slot.resize(total);
  const double base = 2.0 * std::numbers::pi / L;
  auto fold = [n](int i) { return i <= n / 2 ? i : i - n; };
  std::size_t idx = 0;
  if (d == 1) {
    for (int k = 0; k < nh; ++k) slot[idx++] = base * k;
  } else if (d == 2) {
    for (int i0 = 0; i0 < n; ++i0) {
      const double k0 = fold(i0);
      for (int k = 0; k < nh; ++k) slot[idx++] = base * std::sqrt(k0 * k0 + double(k) * k);
    }
  } else {
    for (int i0 = 0; i0 < n; ++i0) {
      const double k0 = fold(i0);
      for (int i1 = 0; i1 < n; ++i1) {
        const double k1 = fold(i1);
        for (int k = 0; k < nh; ++k)
          slot[idx++] = base * std::sqrt(k0 * k0 + k1 * k1 + double(k) * k);
      }
    }
  }
  return slot;
}

// symbol values for a given multiplier functional form; keyed by use site
struct SymbolCache {
  std::vector<double> lambda;  // (2 pi |k| / L)^alpha
  int d = 0, n = 0;
  double L = 0.0, alpha = 0.0;
};

const std::vector<double>& lambda_symbol(int d, int n, double L, double alpha) {
  thread_local SymbolCache cache;
  if (cache.d != d || cache.n != n || cache.L != L || cache.alpha != alpha) {
    const auto& kabs = wavenumbers(d, n, L);
    cache.lambda.resize(kabs.size());
    for (std::size_t i = 0; i < kabs.size(); ++i) cache.lambda[i] = std::pow(kabs[i], alpha);
    cache.d = d;
    cache.n = n;
    cache.L = L;
    cache.alpha = alpha;
  }
  return cache.lambda;
}

void check_alpha(double alpha) {
  if (!(alpha > 0.0) || alpha > 2.0) throw std::domain_error("grid: alpha outside (0,2]");
}

}  // namespace

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

void check_shape(int d, int n) {
  if (d < 1 || d > 3) throw std::invalid_argument("GridField: d must be in {1,2,3}");
  if (!is_power_of_two(n)) {
    std::ostringstream msg;
    msg << "GridField: n must be a power of two, got " << n;
    throw std::invalid_argument(msg.str());
  }
}

double GridField::sup_abs() const { return kernels::sup_abs(values.data(), values.size()); }
double GridField::min_value() const { return kernels::min_value(values.data(), values.size()); }

double GridField::mean() const {
  double s = 0.0;
  for (double v : values) s += v;
  return s / values.size();
}

double GridField::interpolate(const Point& x) const {
  const double h = spacing();
  int base[3] = {0, 0, 0};
  double frac[3] = {0.0, 0.0, 0.0};
  for (int j = 0; j < d; ++j) {
    double u = (x[j] + 0.5 * L) / h;
    u -= std::floor(u / n) * n;  // periodic wrap
    int i = static_cast<int>(std::floor(u));
    if (i >= n) i -= n;
    base[j] = i;
    frac[j] = u - i;
  }
  auto at = [&](int i0, int i1, int i2) -> double {
    std::size_t idx = i0 % n;
    if (d >= 2) idx = idx * n + (i1 % n);
    if (d >= 3) idx = idx * n + (i2 % n);
    return values[idx];
  };
  if (d == 1) {
    const int i = base[0];
    return (1.0 - frac[0]) * at(i, 0, 0) + frac[0] * at(i + 1, 0, 0);
  }
  if (d == 2) {
    const int i = base[0], j = base[1];
    const double fx = frac[0], fy = frac[1];
    return (1 - fx) * ((1 - fy) * at(i, j, 0) + fy * at(i, j + 1, 0)) +
           fx * ((1 - fy) * at(i + 1, j, 0) + fy * at(i + 1, j + 1, 0));
  }
  const int i = base[0], j = base[1], k = base[2];
  const double fx = frac[0], fy = frac[1], fz = frac[2];
  double c00 = (1 - fz) * at(i, j, k) + fz * at(i, j, k + 1);
  double c01 = (1 - fz) * at(i, j + 1, k) + fz * at(i, j + 1, k + 1);
  double c10 = (1 - fz) * at(i + 1, j, k) + fz * at(i + 1, j, k + 1);
  double c11 = (1 - fz) * at(i + 1, j + 1, k) + fz * at(i + 1, j + 1, k + 1);
  return (1 - fx) * ((1 - fy) * c00 + fy * c01) + fx * ((1 - fy) * c10 + fy * c11);
}

GridField make_field(int d, double L, int n) {
  check_shape(d, n);
  if (!(L > 0.0)) throw std::invalid_argument("GridField: L must be > 0");
  GridField f;
  f.d = d;
  f.L = L;
  f.n = n;
  std::size_t total = 1;
  for (int j = 0; j < d; ++j) total *= n;
  f.values.assign(total, 0.0);
  return f;
}

GridField sample(int d, double L, int n, const std::function<double(const Point&)>& fn) {
  GridField f = make_field(d, L, n);
  Point x{0, 0, 0};
  if (d == 1) {
    for (int i = 0; i < n; ++i) {
      x[0] = f.coord(i);
      f.values[i] = fn(x);
    }
  } else if (d == 2) {
    std::size_t idx = 0;
    for (int i = 0; i < n; ++i) {
      x[0] = f.coord(i);
      for (int j = 0; j < n; ++j) {
        x[1] = f.coord(j);
        f.values[idx++] = fn(x);
      }
    }
  } else {
    std::size_t idx = 0;
    for (int i = 0; i < n; ++i) {
      x[0] = f.coord(i);
      for (int j = 0; j < n; ++j) {
        x[1] = f.coord(j);
        for (int k = 0; k < n; ++k) {
          x[2] = f.coord(k);
          f.values[idx++] = fn(x);
        }
      }
    }
  }
  return f;
}

namespace {

void apply_symbol_inplace(GridField& f, const double* sym, std::size_t n_modes) {
  auto& plan = plan_for(f.d, f.n);
  std::copy(f.values.begin(), f.values.end(), plan.real());
  plan.forward();
  kernels::cmul_real(plan.spec_reim(), sym, n_modes);
  plan.backward();
  const double norm = 1.0 / static_cast<double>(plan.real_size());
  for (std::size_t i = 0; i < f.values.size(); ++i) f.values[i] = plan.real()[i] * norm;
}

}  // namespace

GridField apply_fourier_multiplier(const GridField& f,
                                   const std::function<double(double)>& m) {
  check_shape(f.d, f.n);
  const auto& kabs = wavenumbers(f.d, f.n, f.L);
  std::vector<double> sym(kabs.size());
  for (std::size_t i = 0; i < kabs.size(); ++i) sym[i] = m(kabs[i]);
  GridField out = f;
  apply_symbol_inplace(out, sym.data(), sym.size());
  return out;
}

GridField apply_spectral(const GridField& f, double alpha) {
  check_alpha(alpha);
  check_shape(f.d, f.n);
  const auto& lam = lambda_symbol(f.d, f.n, f.L, alpha);
  std::vector<double> sym(lam.size());
  for (std::size_t i = 0; i < lam.size(); ++i) sym[i] = -lam[i];
  GridField out = f;
  apply_symbol_inplace(out, sym.data(), sym.size());
  return out;
}

void semigroup_inplace(GridField& f, double alpha, double t) {
  check_alpha(alpha);
  check_shape(f.d, f.n);
  if (t < 0.0) throw std::domain_error("semigroup: t must be >= 0");
  if (t == 0.0) return;
  const auto& lam = lambda_symbol(f.d, f.n, f.L, alpha);
  thread_local std::vector<double> sym;
  sym.resize(lam.size());
  for (std::size_t i = 0; i < lam.size(); ++i) sym[i] = std::exp(-t * lam[i]);
  apply_symbol_inplace(f, sym.data(), sym.size());
}

GridField apply_semigroup(const GridField& f, double alpha, double t) {
  GridField out = f;
  semigroup_inplace(out, alpha, t);
  return out;
}

}  // namespace fujita::grid
