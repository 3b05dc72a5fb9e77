#pragma once

#include "bpv/dissipation.hpp"
#include "bpv/grid.hpp"

namespace bpv {

struct ModelParams {
  double beta = 1.6e-9;
  DissipationSpec dissipation = closure::None{};
  double dt = 0.0;
  double raw_gamma = 0.1;
  double raw_alpha = 0.53;
  /// Uniform zonal background flow: the total stream function is psi - U y.
  /// Zero except in boosted runs of the symmetry harness.
  double background_u = 0.0;
};

/// Two leapfrog levels plus the stream function of the current one.
struct SimState {
  RealField zeta_prev;
  RealField zeta_curr;
  RealField psi_curr;
  long step = 0;
  double time = 0.0;
};

/// Throws ConfigError on dt <= 0 or filter coefficients out of range.
void validate(const ModelParams& params);

RealField arakawa_jacobian(const RealField& a, const RealField& b);

/// -J(psi, zeta) - beta psi_x - U zeta_x, projected to zero mean.
RealField advective_tendency(const RealField& psi, const RealField& zeta, const ModelParams& params);
/// Advective part plus D(psi, zeta), both at the same level, zero mean.
RealField tendency(const RealField& psi, const RealField& zeta, const ModelParams& params);
RealField tendency(const SimState& state, const ModelParams& params);

/// Single-level state (both levels equal) from an initial stream function;
/// its mean is dropped.
SimState initial_state(const RealField& psi0);

/// Second leapfrog level from a single one: a forward-Euler half step then a
/// centered step of size dt. Returns a state at step 1.
SimState bootstrap(const RealField& zeta0, const ModelParams& params);

/// Leapfrog step with the Robert-Asselin-Williams filter. Advection at the
/// current level, dissipation at the lagged one. Throws InstabilityError
/// carrying the failing step number on non-finite values.
SimState step_leapfrog_raw(const SimState& state, const ModelParams& params);

/// 0.4 min(dx, dy) / max|grad psi_total|.
double auto_dt(const RealField& psi, double background_u = 0.0);

}  // namespace bpv
