#include "bpv/spectral.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <utility>

namespace bpv {

namespace {

struct PlanPair {
  fftw_plan forward;
  fftw_plan backward;
};

// fftw planning is not thread-safe; execution of an existing plan is.
const PlanPair& plans_for(int nx, int ny) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, PlanPair> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find({nx, ny});
  if (it != cache.end()) return it->second;
  const std::size_t nreal = static_cast<std::size_t>(nx) * ny;
  const std::size_t ncplx = static_cast<std::size_t>(nx / 2 + 1) * ny;
  double* r = fftw_alloc_real(nreal);
  fftw_complex* c = fftw_alloc_complex(ncplx);
  const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
  PlanPair p{fftw_plan_dft_r2c_2d(ny, nx, r, c, flags), fftw_plan_dft_c2r_2d(ny, nx, c, r, flags)};
  fftw_free(r);
  fftw_free(c);
  return cache.emplace(std::make_pair(nx, ny), p).first->second;
}

}  // namespace

SpectralField::SpectralField(const Grid& grid)
    : grid_(grid), c_(static_cast<std::size_t>(grid.nx() / 2 + 1) * grid.ny()) {}

double SpectralField::kappa_x(int kxi) const noexcept { return 2.0 * std::numbers::pi * kxi / grid_.lx(); }

double SpectralField::kappa_y(int jy) const noexcept { return 2.0 * std::numbers::pi * ky(jy) / grid_.ly(); }

std::complex<double> SpectralField::coefficient(int kx, int ky) const {
  const int nx = grid_.nx(), n_y = grid_.ny();
  auto wrap = [](int k, int n) { return ((k % n) + n) % n; };
  const int kxw = wrap(kx, nx);
  if (kxw <= nx / 2) return at(kxw, wrap(ky, n_y));
  return std::conj(at(nx - kxw, wrap(-ky, n_y)));
}

SpectralField dft2(const RealField& f) {
  const Grid& g = f.grid();
  SpectralField F(g);
  const PlanPair& p = plans_for(g.nx(), g.ny());
  // r2c does not modify its input
  fftw_execute_dft_r2c(p.forward, const_cast<double*>(f.data()),
                       reinterpret_cast<fftw_complex*>(F.raw().data()));
  return F;
}

RealField idft2(const SpectralField& F) {
  const Grid& g = F.grid();
  std::vector<std::complex<double>> scratch = F.raw();  // c2r destroys its input
  RealField f(g);
  const PlanPair& p = plans_for(g.nx(), g.ny());
  fftw_execute_dft_c2r(p.backward, reinterpret_cast<fftw_complex*>(scratch.data()), f.data());
  f *= 1.0 / static_cast<double>(g.size());
  return f;
}

double spectral_energy_sum(const SpectralField& F) {
  double s = 0.0;
  for (int jy = 0; jy < F.ny(); ++jy)
    for (int kxi = 0; kxi < F.nkx(); ++kxi) s += F.mode_weight(kxi) * std::norm(F.at(kxi, jy));
  return s / static_cast<double>(F.grid().size());
}

void apply_multiplier_inplace(SpectralField& F, const SpectralMultiplier& m) {
  for (int jy = 0; jy < F.ny(); ++jy) {
    const double ky = F.kappa_y(jy);
    for (int kxi = 0; kxi < F.nkx(); ++kxi) F.at(kxi, jy) *= m(F.kappa_x(kxi), ky, kxi, jy);
  }
}

RealField apply_multiplier(const RealField& f, const SpectralMultiplier& m) {
  SpectralField F = dft2(f);
  apply_multiplier_inplace(F, m);
  return idft2(F);
}

RealField spectral_derivative(const SpectralField& F, Axis axis, int order) {
  if (order < 1) throw ConfigError("derivative order must be positive");
  const bool odd = order % 2 == 1;
  // (i k)^order = i^order k^order
  static const std::complex<double> ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const std::complex<double> phase = ipow[order % 4];
  SpectralField G = F;
  for (int jy = 0; jy < G.ny(); ++jy) {
    const double ky = G.kappa_y(jy);
    for (int kxi = 0; kxi < G.nkx(); ++kxi) {
      const bool nyq = axis == Axis::x ? G.is_nyquist_x(kxi) : G.is_nyquist_y(jy);
      const double k = axis == Axis::x ? G.kappa_x(kxi) : ky;
      double kp = 1.0;
      for (int m = 0; m < order; ++m) kp *= k;
      G.at(kxi, jy) *= (odd && nyq) ? std::complex<double>(0.0) : phase * kp;
    }
  }
  return idft2(G);
}

RealField spectral_derivative(const RealField& f, Axis axis, int order) {
  return spectral_derivative(dft2(f), axis, order);
}

RealField laplacian(const RealField& f) { return laplacian_power(f, 1); }

RealField laplacian_power(const SpectralField& F, int n) {
  if (n < 0) throw ConfigError("laplacian power must be non-negative");
  SpectralField G = F;
  for (int jy = 0; jy < G.ny(); ++jy) {
    const double ky = G.kappa_y(jy);
    for (int kxi = 0; kxi < G.nkx(); ++kxi) {
      const double kx = G.kappa_x(kxi);
      const double l = -(kx * kx + ky * ky);
      double lp = 1.0;
      for (int m = 0; m < n; ++m) lp *= l;
      G.at(kxi, jy) *= lp;
    }
  }
  return idft2(G);
}

RealField laplacian_power(const RealField& f, int n) {
  if (n < 0) throw ConfigError("laplacian power must be non-negative");
  if (n == 0) return f;
  return laplacian_power(dft2(f), n);
}

RealField poisson_solve(const RealField& zeta, PoissonReport* report) {
  const double m = zeta.mean();
  const double rms = zeta.l2() / std::sqrt(static_cast<double>(zeta.size()));
  PoissonReport rep;
  rep.removed_mean = m;
  rep.mean_projected = std::abs(m) > 1e-10 * rms;
  if (report) *report = rep;
  SpectralField Z = dft2(zeta);
  for (int jy = 0; jy < Z.ny(); ++jy) {
    const double ky = Z.kappa_y(jy);
    for (int kxi = 0; kxi < Z.nkx(); ++kxi) {
      const double kx = Z.kappa_x(kxi);
      Z.at(kxi, jy) *= (kxi == 0 && jy == 0) ? 0.0 : -1.0 / (kx * kx + ky * ky);
    }
  }
  return idft2(Z);
}

RealField spectral_shift(const RealField& f, double sx, double sy) {
  const int nx = f.grid().nx(), ny = f.grid().ny();
  return apply_multiplier(f, [=](double kx, double ky, int kxi, int jy) -> std::complex<double> {
    const std::complex<double> px =
        kxi == nx / 2 ? std::complex<double>(std::cos(kx * sx)) : std::polar(1.0, kx * sx);
    const std::complex<double> py =
        jy == ny / 2 ? std::complex<double>(std::cos(ky * sy)) : std::polar(1.0, ky * sy);
    return px * py;
  });
}

RealField circular_shift(const RealField& f, int di, int dj) {
  const Grid& g = f.grid();
  RealField out(g);
  const int nx = g.nx(), ny = g.ny();
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i) out(i, j) = f(((i + di) % nx + nx) % nx, ((j + dj) % ny + ny) % ny);
  return out;
}

RealField truncate_two_thirds(const RealField& f) {
  const int nx = f.grid().nx(), ny = f.grid().ny();
  SpectralField F = dft2(f);
  for (int jy = 0; jy < F.ny(); ++jy)
    for (int kxi = 0; kxi < F.nkx(); ++kxi)
      if (3 * kxi > nx || 3 * std::abs(F.ky(jy)) > ny) F.at(kxi, jy) = 0.0;
  return idft2(F);
}

}  // namespace bpv
