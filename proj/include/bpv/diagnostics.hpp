#pragma once

#include <vector>

#include "bpv/grid.hpp"

namespace bpv {

struct SpectrumResult {
  std::vector<int> k;       ///< shell index m >= 1
  std::vector<double> E;    ///< shell energy; sum equals the average kinetic energy
  bool anisotropic = false; ///< lx != ly: shells use the x fundamental
};

struct DiagnosticsRecord {
  double time = 0.0;
  double energy = 0.0;              ///< -1/2 sum psi zeta dA
  double enstrophy = 0.0;           ///< 1/2 sum eta^2 dA, eta = zeta + beta y
  double relative_enstrophy = 0.0;  ///< 1/2 sum zeta^2 dA
  double circulation = 0.0;         ///< sum zeta dA
  double x_momentum = 0.0;          ///< sum y zeta dA
};

DiagnosticsRecord integrals(const RealField& psi, const RealField& zeta, double beta);

/// Shell-binned kinetic energy spectrum, shells [m - 1/2, m + 1/2) in units
/// of the fundamental wavenumber, zero mode excluded.
SpectrumResult energy_spectrum(const RealField& psi);

/// Least-squares slope of log E against log k over shells m_lo..m_hi.
/// Throws FitDomainError on a bad range or a non-positive energy in it.
double fit_slope(const SpectrumResult& spec, int m_lo, int m_hi);

}  // namespace bpv
