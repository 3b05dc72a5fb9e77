#include "bpv/initial_condition.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "bpv/diagnostics.hpp"
#include "bpv/spectral.hpp"

namespace bpv {

double ic_spectrum_shape(double k, const InitialConditionConfig& ic) {
  return std::pow(k, ic.p) / std::pow(1.0 + k / ic.k0, ic.q);
}

RealField generate_initial_condition(const RunConfig& cfg, std::vector<std::string>* warnings) {
  validate(cfg);
  if (warnings && cfg.ic.q <= cfg.ic.p + 2.0)
    warnings->push_back("ic.q <= ic.p + 2: the initial energy spectrum does not decay at high wavenumbers");
  const Grid g = cfg.make_grid();
  SpectralField P(g);
  const double k0 = 2.0 * std::numbers::pi / g.lx();
  auto shell = [&](int kxi, int jy) {
    const double kx = P.kappa_x(kxi), ky = P.kappa_y(jy);
    return std::sqrt(kx * kx + ky * ky) / k0;
  };
  auto excluded = [&](int kxi, int jy) { return (kxi == 0 && jy == 0) || P.is_nyquist_x(kxi) || P.is_nyquist_y(jy); };

  // Number of full-spectrum modes per integer shell that receive energy.
  std::vector<double> count;
  for (int jy = 0; jy < P.ny(); ++jy)
    for (int kxi = 0; kxi < P.nkx(); ++kxi) {
      if (excluded(kxi, jy)) continue;
      const auto m = static_cast<std::size_t>(std::floor(shell(kxi, jy) + 0.5));
      if (m >= count.size()) count.resize(m + 1, 0.0);
      count[m] += P.mode_weight(kxi);
    }

  std::mt19937_64 rng(cfg.seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  for (int jy = 0; jy < P.ny(); ++jy)
    for (int kxi = 0; kxi < P.nkx(); ++kxi) {
      const double re = normal(rng), im = normal(rng);
      if (excluded(kxi, jy)) continue;
      // kx = 0: only ky > 0 is drawn freely, ky < 0 is its conjugate.
      if (kxi == 0 && P.ky(jy) < 0) continue;
      const double k = shell(kxi, jy);
      const double kappa2 = std::pow(k * k0, 2);
      const auto m = static_cast<std::size_t>(std::floor(k + 0.5));
      const double a = std::sqrt(ic_spectrum_shape(k, cfg.ic) / (count[m] * kappa2));
      P.at(kxi, jy) = {a * re, a * im};
      if (kxi == 0) P.at(0, g.ny() - jy) = std::conj(P.at(0, jy));
    }

  RealField psi = idft2(P);
  psi.subtract_mean();
  double energy = 0.0;
  for (double e : energy_spectrum(psi).E) energy += e;
  if (!(energy > 0.0)) throw ConfigError("initial condition has no energy on this grid");
  psi *= std::sqrt(cfg.ic.amplitude / energy);
  return psi;
}

}  // namespace bpv
