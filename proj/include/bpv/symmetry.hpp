#pragma once

#include <string>

#include "bpv/config.hpp"
#include "bpv/jet.hpp"

namespace bpv {

enum class FieldKind { vorticity, stream_function };

/// Throws HarnessDomainError unless f is at most linear and g constant.
void require_harness_subgroup(const GroupElement& gel);

/// Image of a gridded field at original time t: values on the grid scaled by
/// e^{-eps1}, same index layout.
RealField pushforward_field(const GroupElement& gel, const RealField& field, FieldKind kind, double t,
                            double background_u = 0.0);
/// Inverse of pushforward_field: a field on the transformed grid mapped back
/// to the original grid at original time t.
RealField pullback_field(const GroupElement& gel, const RealField& field, const Grid& original, FieldKind kind,
                         double t, double background_u = 0.0);

/// Configuration of the transformed run: lengths x e^{-eps1}, dt x e^{eps1},
/// same step count, background flow e^{-2 eps1}(U + f'), initial psi mapped.
/// dt must be resolved first (cfg.dt set), see resolve_dt.
RunConfig transform_setup(const GroupElement& gel, const RunConfig& cfg);

/// Copy of cfg with dt = auto replaced by its value and the initial stream
/// function pinned.
RunConfig resolve_run(const RunConfig& cfg);

struct EquivarianceReport {
  double field_rel_err = 0.0;
  double spectrum_rms_log_err = 0.0;
  long steps = 0;
};

/// Runs cfg and its image under gel for `steps` steps, pulls the transformed
/// final vorticity back and compares. Throws InstabilityError naming the
/// failing run.
EquivarianceReport equivariance_experiment(const RunConfig& cfg, const GroupElement& gel, long steps);

/// RMS of log10 differences of k=1-normalized spectra over shells 2..kmax.
double spectrum_rms_log_error(const RealField& psi_a, const RealField& psi_b, int kmax);

void write_equivariance_csv(const std::string& path, const GroupElement& gel, const RunConfig& cfg,
                            const EquivarianceReport& report);

}  // namespace bpv
