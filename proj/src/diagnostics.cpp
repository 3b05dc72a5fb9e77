#include "bpv/diagnostics.hpp"

#include <cmath>
#include <numbers>

#include "bpv/kernels.hpp"
#include "bpv/spectral.hpp"

namespace bpv {

DiagnosticsRecord integrals(const RealField& psi, const RealField& zeta, double beta) {
  require_same_grid(psi, zeta, "integrals");
  const Grid& g = zeta.grid();
  const double dA = g.cell_area();
  RealField y = RealField::from_function(g, [](double, double yy) { return yy; });
  RealField eta = zeta;
  kernels::axpy(beta, y.values(), eta.values());
  DiagnosticsRecord r;
  r.energy = -0.5 * kernels::dot(g, psi.values(), zeta.values()) * dA;
  r.enstrophy = 0.5 * kernels::dot(g, eta.values(), eta.values()) * dA;
  r.relative_enstrophy = 0.5 * kernels::dot(g, zeta.values(), zeta.values()) * dA;
  r.circulation = kernels::sum(g, zeta.values()) * dA;
  r.x_momentum = kernels::dot(g, y.values(), zeta.values()) * dA;
  return r;
}

SpectrumResult energy_spectrum(const RealField& psi) {
  const Grid& g = psi.grid();
  const SpectralField P = dft2(psi);
  SpectrumResult s;
  s.anisotropic = g.lx() != g.ly();
  const double k0 = 2.0 * std::numbers::pi / g.lx();
  const double n2 = static_cast<double>(g.size()) * static_cast<double>(g.size());
  std::vector<double> shells;
  for (int jy = 0; jy < P.ny(); ++jy) {
    const double ky = P.kappa_y(jy);
    for (int kxi = 0; kxi < P.nkx(); ++kxi) {
      if (kxi == 0 && jy == 0) continue;
      const double kx = P.kappa_x(kxi);
      const double kk = kx * kx + ky * ky;
      const int m = static_cast<int>(std::floor(std::sqrt(kk) / k0 + 0.5));
      if (m < 1) continue;
      if (m >= static_cast<int>(shells.size()) + 1) shells.resize(m, 0.0);
      shells[m - 1] += 0.5 * P.mode_weight(kxi) * kk * std::norm(P.at(kxi, jy)) / n2;
    }
  }
  for (std::size_t m = 0; m < shells.size(); ++m) {
    s.k.push_back(static_cast<int>(m) + 1);
    s.E.push_back(shells[m]);
  }
  return s;
}

double fit_slope(const SpectrumResult& spec, int m_lo, int m_hi) {
  if (m_lo < 1 || m_hi <= m_lo) throw FitDomainError("fit range must satisfy 1 <= m_lo < m_hi");
  if (spec.k.empty() || m_lo < spec.k.front() || m_hi > spec.k.back())
    throw FitDomainError("fit range [" + std::to_string(m_lo) + ", " + std::to_string(m_hi) +
                         "] outside the available shells");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  for (std::size_t i = 0; i < spec.k.size(); ++i) {
    if (spec.k[i] < m_lo || spec.k[i] > m_hi) continue;
    if (!(spec.E[i] > 0.0))
      throw FitDomainError("non-positive shell energy at k = " + std::to_string(spec.k[i]));
    const double x = std::log(spec.k[i]), y = std::log(spec.E[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++n;
  }
  if (n < 2) throw FitDomainError("fit range holds fewer than two shells");
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace bpv
