#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "bpv/grid.hpp"

namespace bpv {

enum class Axis { x, y };

/// Half-plane discrete Fourier coefficients of a real field.
///
/// Stores integer wavenumbers kx = 0..nx/2 and all ky (ky index jy maps to
/// jy for jy <= ny/2 and jy - ny otherwise). The forward transform is
/// unscaled; the inverse carries 1/(nx*ny). Negative kx are implied by
/// conjugate symmetry.
class SpectralField {
 public:
  explicit SpectralField(const Grid& grid);

  const Grid& grid() const noexcept { return grid_; }
  int nkx() const noexcept { return grid_.nx() / 2 + 1; }
  int ny() const noexcept { return grid_.ny(); }

  std::complex<double>& at(int kxi, int jy) noexcept { return c_[kxi + static_cast<std::size_t>(nkx()) * jy]; }
  std::complex<double> at(int kxi, int jy) const noexcept {
    return c_[kxi + static_cast<std::size_t>(nkx()) * jy];
  }

  /// Signed integer y wavenumber of storage row jy.
  int ky(int jy) const noexcept { return jy <= ny() / 2 ? jy : jy - ny(); }
  /// Angular wavenumbers 2*pi*k/L.
  double kappa_x(int kxi) const noexcept;
  double kappa_y(int jy) const noexcept;
  /// Multiplicity of a stored column in the full spectrum (1 or 2).
  double mode_weight(int kxi) const noexcept { return (kxi == 0 || kxi == grid_.nx() / 2) ? 1.0 : 2.0; }
  bool is_nyquist_x(int kxi) const noexcept { return kxi == grid_.nx() / 2; }
  bool is_nyquist_y(int jy) const noexcept { return jy == ny() / 2; }

  /// Full-spectrum coefficient for any signed (kx, ky), via conjugate symmetry.
  std::complex<double> coefficient(int kx, int ky) const;

  std::vector<std::complex<double>>& raw() noexcept { return c_; }
  const std::vector<std::complex<double>>& raw() const noexcept { return c_; }

 private:
  Grid grid_;
  std::vector<std::complex<double>> c_;
};

SpectralField dft2(const RealField& f);
RealField idft2(const SpectralField& F);

/// Sum of |F|^2 over the full spectrum divided by nx*ny; equals sum of f^2.
double spectral_energy_sum(const SpectralField& F);

/// Multiplies each stored coefficient by m(kappa_x, kappa_y, kxi, jy).
using SpectralMultiplier = std::function<std::complex<double>(double, double, int, int)>;
RealField apply_multiplier(const RealField& f, const SpectralMultiplier& m);
void apply_multiplier_inplace(SpectralField& F, const SpectralMultiplier& m);

/// d^order f / d axis^order; the Nyquist mode is zeroed for odd orders.
RealField spectral_derivative(const RealField& f, Axis axis, int order = 1);
/// Same, from coefficients already transformed.
RealField spectral_derivative(const SpectralField& F, Axis axis, int order = 1);
RealField laplacian(const RealField& f);
/// Laplacian applied n times (n >= 0).
RealField laplacian_power(const RealField& f, int n);
RealField laplacian_power(const SpectralField& F, int n);

struct PoissonReport {
  double removed_mean = 0.0;
  bool mean_projected = false;
};

/// Solves Laplace(psi) = zeta with the zero-mean gauge for psi.
RealField poisson_solve(const RealField& zeta, PoissonReport* report = nullptr);

/// g(x, y) = f(x + sx, y + sy) by trigonometric interpolation. Exact for
/// band-limited fields without Nyquist content.
RealField spectral_shift(const RealField& f, double sx, double sy);
/// g(i, j) = f(i + di, j + dj) with periodic wrap. Exact.
RealField circular_shift(const RealField& f, int di, int dj);

/// Zeroes all modes with |kx| > nx/3 or |ky| > ny/3.
RealField truncate_two_thirds(const RealField& f);

}  // namespace bpv
