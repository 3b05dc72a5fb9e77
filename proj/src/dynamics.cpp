#include "bpv/dynamics.hpp"

#include <algorithm>
#include <cmath>

#include "bpv/kernels.hpp"
#include "bpv/spectral.hpp"

namespace bpv {

void validate(const ModelParams& params) {
  if (!(params.dt > 0.0) || !std::isfinite(params.dt)) throw ConfigError("time step dt must be positive");
  if (!(params.raw_gamma >= 0.0 && params.raw_gamma < 1.0)) throw ConfigError("raw_gamma must lie in [0, 1)");
  if (!(params.raw_alpha > 0.0 && params.raw_alpha <= 1.0)) throw ConfigError("raw_alpha must lie in (0, 1]");
  if (!std::isfinite(params.beta)) throw ConfigError("beta must be finite");
  validate(params.dissipation);
}

RealField arakawa_jacobian(const RealField& a, const RealField& b) {
  require_same_grid(a, b, "arakawa_jacobian");
  RealField out(a.grid());
  kernels::arakawa_jacobian(a.grid(), a.data(), b.data(), out.data());
  return out;
}

RealField advective_tendency(const RealField& psi, const RealField& zeta, const ModelParams& params) {
  require_same_grid(psi, zeta, "tendency");
  RealField t = arakawa_jacobian(psi, zeta);
  t *= -1.0;
  if (params.beta != 0.0) kernels::axpy(-params.beta, spectral_derivative(psi, Axis::x).values(), t.values());
  if (params.background_u != 0.0)
    kernels::axpy(-params.background_u, spectral_derivative(zeta, Axis::x).values(), t.values());
  t.subtract_mean();
  return t;
}

RealField tendency(const RealField& psi, const RealField& zeta, const ModelParams& params) {
  RealField t = advective_tendency(psi, zeta, params);
  t += dissipation(params.dissipation, psi, zeta, params.beta);
  t.subtract_mean();
  return t;
}

RealField tendency(const SimState& state, const ModelParams& params) {
  return tendency(state.psi_curr, state.zeta_curr, params);
}

SimState initial_state(const RealField& psi0) {
  RealField zeta = laplacian(psi0);
  zeta.subtract_mean();
  RealField psi = poisson_solve(zeta);
  return {zeta, zeta, psi, 0, 0.0};
}

namespace {

void require_finite(const RealField& f, long step) {
  if (!f.all_finite()) throw InstabilityError("non-finite vorticity at step " + std::to_string(step), step);
}

}  // namespace

SimState bootstrap(const RealField& zeta0, const ModelParams& params) {
  validate(params);
  RealField z0 = zeta0;
  z0.subtract_mean();
  const RealField psi0 = poisson_solve(z0);
  RealField half = z0;
  kernels::axpy(0.5 * params.dt, tendency(psi0, z0, params).values(), half.values());
  require_finite(half, 1);
  RealField z1 = z0;
  kernels::axpy(params.dt, tendency(poisson_solve(half), half, params).values(), z1.values());
  z1.subtract_mean();
  require_finite(z1, 1);
  RealField psi1 = poisson_solve(z1);
  return {std::move(z0), std::move(z1), std::move(psi1), 1, params.dt};
}

SimState step_leapfrog_raw(const SimState& state, const ModelParams& params) {
  validate(params);
  const long next = state.step + 1;
  RealField t = advective_tendency(state.psi_curr, state.zeta_curr, params);
  if (!std::holds_alternative<closure::None>(params.dissipation)) {
    try {
      t += dissipation(params.dissipation, poisson_solve(state.zeta_prev), state.zeta_prev, params.beta);
    } catch (const OverflowError& e) {
      throw InstabilityError(std::string(e.what()) + " at step " + std::to_string(next), next);
    }
    t.subtract_mean();
  }
  RealField znew = state.zeta_prev;
  kernels::axpy(2.0 * params.dt, t.values(), znew.values());

  RealField zcurr = state.zeta_curr;
  if (params.raw_gamma != 0.0) {
    const double g = params.raw_gamma, a = params.raw_alpha;
    const std::span<const double> zp = state.zeta_prev.values(), zc = state.zeta_curr.values();
    const std::span<double> zn = znew.values(), zf = zcurr.values();
    kernels::transform(zf, [&](double p, double c, double n) { return c + a * g * (p - 2.0 * c + n); }, zp, zc,
                       std::span<const double>(zn));
    // znew is updated after zcurr used its unfiltered value
    kernels::transform(zn, [&](double p, double c, double n) { return n + (a - 1.0) * g * (p - 2.0 * c + n); },
                       zp, zc, std::span<const double>(zn));
  }
  znew.subtract_mean();
  require_finite(znew, next);
  RealField psi = poisson_solve(znew);
  return {std::move(zcurr), std::move(znew), std::move(psi), next, state.time + params.dt};
}

double auto_dt(const RealField& psi, double background_u) {
  const SpectralField P = dft2(psi);
  const RealField px = spectral_derivative(P, Axis::x);
  const RealField py = spectral_derivative(P, Axis::y);
  double vmax = 0.0;
  for (std::size_t k = 0; k < psi.size(); ++k) {
    const double uy = py[k] - background_u;
    vmax = std::max(vmax, std::sqrt(px[k] * px[k] + uy * uy));
  }
  if (!(vmax > 0.0)) throw ConfigError("dt = auto needs a non-zero initial flow");
  const Grid& g = psi.grid();
  return 0.4 * std::min(g.dx(), g.dy()) / vmax;
}

}  // namespace bpv
