#include "bpv/symmetry.hpp"

#include <cmath>

#include "bpv/csv.hpp"
#include "bpv/diagnostics.hpp"
#include "bpv/experiment.hpp"
#include "bpv/spectral.hpp"

namespace bpv {

void require_harness_subgroup(const GroupElement& gel) {
  if (gel.f.degree() > 1) throw HarnessDomainError("field harness supports only f(t) = f0 + c t");
  if (gel.g.degree() > 0) throw HarnessDomainError("field harness supports only constant gauges g");
}

namespace {

// Shift by (sx, sy) in physical units; exact circular shift when both are
// whole multiples of the spacing.
RealField shift(const RealField& f, double sx, double sy) {
  const Grid& g = f.grid();
  const double ix = sx / g.dx(), iy = sy / g.dy();
  const double rx = std::nearbyint(ix), ry = std::nearbyint(iy);
  if (std::abs(ix - rx) <= 1e-12 * std::max(1.0, std::abs(ix)) && std::abs(iy - ry) <= 1e-12 * std::max(1.0, std::abs(iy)))
    return circular_shift(f, static_cast<int>(rx), static_cast<int>(ry));
  return spectral_shift(f, sx, sy);
}

double weight(FieldKind kind) { return kind == FieldKind::vorticity ? -1.0 : -3.0; }

// Constant picked up by the stream function: e^{-3 eps1}(g + (U + f') eps3).
double psi_constant(const GroupElement& gel, double t, double u) {
  return std::exp(-3.0 * gel.eps1) * (gel.g(t) + (u + gel.f.derivative(1, t)) * gel.eps3);
}

}  // namespace

RealField pushforward_field(const GroupElement& gel, const RealField& field, FieldKind kind, double t,
                            double background_u) {
  require_harness_subgroup(gel);
  const Grid& g = field.grid();
  const double s = std::exp(gel.eps1);
  const Grid image(g.nx(), g.ny(), g.lx() / s, g.ly() / s);
  RealField shifted = shift(field, -gel.f(t), -gel.eps3);
  if (gel.eps1 != 0.0) shifted *= std::exp(weight(kind) * gel.eps1);
  RealField out(image, std::vector<double>(shifted.values().begin(), shifted.values().end()));
  if (kind == FieldKind::stream_function) {
    const double c = psi_constant(gel, t, background_u);
    if (c != 0.0)
      for (std::size_t k = 0; k < out.size(); ++k) out[k] += c;
  }
  return out;
}

RealField pullback_field(const GroupElement& gel, const RealField& field, const Grid& original, FieldKind kind,
                         double t, double background_u) {
  require_harness_subgroup(gel);
  const Grid& g = field.grid();
  if (g.nx() != original.nx() || g.ny() != original.ny())
    throw ShapeError("pullback: transformed and original grids differ in size");
  const double s = std::exp(gel.eps1);
  RealField v = field;
  if (kind == FieldKind::stream_function) {
    const double c = psi_constant(gel, t, background_u);
    if (c != 0.0)
      for (std::size_t k = 0; k < v.size(); ++k) v[k] -= c;
  }
  RealField shifted = shift(v, gel.f(t) / s, gel.eps3 / s);
  if (gel.eps1 != 0.0) shifted *= std::exp(-weight(kind) * gel.eps1);
  return RealField(original, std::vector<double>(shifted.values().begin(), shifted.values().end()));
}

RunConfig resolve_run(const RunConfig& cfg) {
  RunConfig out = cfg;
  if (!out.initial_psi) out.initial_psi = initial_psi(cfg);
  if (!out.dt) out.dt = auto_dt(*out.initial_psi, cfg.background_u);
  return out;
}

RunConfig transform_setup(const GroupElement& gel, const RunConfig& cfg) {
  require_harness_subgroup(gel);
  if (!cfg.dt) throw ConfigError("transform_setup needs a resolved dt");
  const double s = std::exp(gel.eps1);
  RunConfig out = cfg;
  const bool id = gel.eps1 == 0.0;
  out.grid.lx = id ? cfg.grid.lx : cfg.grid.lx / s;
  out.grid.ly = id ? cfg.grid.ly : cfg.grid.ly / s;
  out.dt = id ? *cfg.dt : *cfg.dt * s;
  out.start_time = s * (cfg.start_time + gel.eps2);
  const double fdot = gel.f.derivative(1, cfg.start_time);
  out.background_u = (id && fdot == 0.0) ? cfg.background_u : (cfg.background_u + fdot) / (s * s);
  const RealField psi0 = cfg.initial_psi ? *cfg.initial_psi : initial_psi(cfg);
  out.initial_psi =
      pushforward_field(gel, psi0, FieldKind::stream_function, cfg.start_time, cfg.background_u);
  return out;
}

double spectrum_rms_log_error(const RealField& psi_a, const RealField& psi_b, int kmax) {
  const SpectrumResult a = energy_spectrum(psi_a), b = energy_spectrum(psi_b);
  if (a.E.empty() || b.E.empty() || !(a.E[0] > 0.0) || !(b.E[0] > 0.0))
    throw FitDomainError("spectra need positive energy at k = 1");
  double acc = 0.0;
  int n = 0;
  for (int m = 2; m <= kmax && m <= static_cast<int>(std::min(a.E.size(), b.E.size())); ++m) {
    const double ea = a.E[m - 1] / a.E[0], eb = b.E[m - 1] / b.E[0];
    if (!(ea > 0.0) || !(eb > 0.0)) throw FitDomainError("non-positive shell energy at k = " + std::to_string(m));
    const double d = std::log10(ea) - std::log10(eb);
    acc += d * d;
    ++n;
  }
  return n ? std::sqrt(acc / n) : 0.0;
}

EquivarianceReport equivariance_experiment(const RunConfig& cfg, const GroupElement& gel, long steps) {
  require_harness_subgroup(gel);
  RunConfig ref = resolve_run(cfg);
  ref.steps = steps;
  const RunConfig img = transform_setup(gel, ref);

  const SimulationResult a = simulate(ref);
  if (a.status == SimulationResult::Status::unstable)
    throw InstabilityError("reference run: " + a.message, a.steps_completed);
  const SimulationResult b = simulate(img);
  if (b.status == SimulationResult::Status::unstable)
    throw InstabilityError("transformed run: " + b.message, b.steps_completed);

  const double t_end = ref.start_time + a.final_state->time;
  const RealField back = pullback_field(gel, b.final_state->zeta_curr, ref.make_grid(), FieldKind::vorticity, t_end,
                                        ref.background_u);
  EquivarianceReport r;
  r.steps = steps;
  r.field_rel_err = relative_l2(back, a.final_state->zeta_curr);
  r.spectrum_rms_log_err =
      spectrum_rms_log_error(poisson_solve(back), a.final_state->psi_curr, ref.grid.nx / 4);
  return r;
}

void write_equivariance_csv(const std::string& path, const GroupElement& gel, const RunConfig& cfg,
                            const EquivarianceReport& report) {
  CsvWriter w(path, {"eps1", "eps2", "eps3", "f0", "f1", "g0", "dissipation", "steps", "field_rel_err",
                     "spectrum_rms_log_err"});
  w.cell(gel.eps1).cell(gel.eps2).cell(gel.eps3).cell(gel.f(0.0)).cell(gel.f.derivative(1, 0.0)).cell(gel.g(0.0));
  w.cell(describe(cfg.dissipation)).cell(report.steps).cell(report.field_rel_err).cell(report.spectrum_rms_log_err);
  w.end_row();
}

}  // namespace bpv
