#pragma once

// Periodic grid fields on [-L/2, L/2)^d and the spectral machinery of the
// fractional Laplacian: multiplier application through FFTW, plus helpers
// (sampling, periodic multilinear interpolation, reductions).

#include <array>
#include <cstddef>
#include <functional>
#include <vector>

namespace fujita::grid {

using Point = std::array<double, 3>;

struct GridField {
  int d = 1;
  double L = 1.0;
  int n = 0;  // points per axis, power of two
  std::vector<double> values;  // size n^d, last axis fastest

  double spacing() const { return L / n; }
  double coord(int i) const { return -0.5 * L + i * spacing(); }
  std::size_t size() const { return values.size(); }

  double sup_abs() const;
  double min_value() const;
  double mean() const;

  // periodic multilinear interpolation
  double interpolate(const Point& x) const;
};

bool is_power_of_two(int n);

// Validates (d in 1..3, n power of two) and throws std::invalid_argument.
void check_shape(int d, int n);

GridField make_field(int d, double L, int n);
GridField sample(int d, double L, int n, const std::function<double(const Point&)>& f);

// field with Fourier coefficient k scaled by m(|k| 2 pi / L); zero mode by m(0)
GridField apply_fourier_multiplier(const GridField& f,
                                   const std::function<double(double)>& m);

// Delta_alpha on the torus: multiplier -(2 pi |k| / L)^alpha.
GridField apply_spectral(const GridField& f, double alpha);

// exp(t Delta_alpha): multiplier exp(-t (2 pi |k| / L)^alpha).
GridField apply_semigroup(const GridField& f, double alpha, double t);

// In-place semigroup step reusing cached symbol array (hot path of the solver).
void semigroup_inplace(GridField& f, double alpha, double t);

}  // namespace fujita::grid
