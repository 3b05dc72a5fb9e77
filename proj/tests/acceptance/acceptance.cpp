// Acceptance run: one PASS/FAIL line per criterion, details indented below.
//
//   acceptance [--only 1,3,9] [--allow-fail 7,8]
//
// Exit status is 0 when every selected criterion passes, or when the only
// failures are listed in --allow-fail (they still print FAIL).

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "bpv/certify.hpp"
#include "bpv/conservation.hpp"
#include "bpv/diagnostics.hpp"
#include "bpv/dynamics.hpp"
#include "bpv/errors.hpp"
#include "bpv/experiment.hpp"
#include "bpv/kernels.hpp"
#include "bpv/spectral.hpp"
#include "bpv/symmetry.hpp"

using namespace bpv;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass = false;
  std::vector<std::string> notes;
};

template <class... A>
std::string fmt(const char* f, A... a) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, a...);
  return buf;
}

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

RunConfig default_config(int n) {
  RunConfig c;
  c.grid = {n, n, 2.56e5, 2.56e5};
  return c;
}

// rms(D) / rms(advection) at t = 0 for a unit coefficient; both closures used
// here are linear in nu.
double dissipation_ratio_per_nu(RunConfig cfg) {
  const RealField psi = initial_psi(cfg);
  const RealField zeta = laplacian(psi);
  const ModelParams mp = model_params(cfg, psi);
  return dissipation(cfg.dissipation, psi, zeta, cfg.beta).l2() / advective_tendency(psi, zeta, mp).l2();
}

template <class Closure>
RunConfig with_ratio(RunConfig cfg, int n, double ratio) {
  cfg.dissipation = Closure{n, 1.0};
  const double per_nu = dissipation_ratio_per_nu(cfg);
  cfg.dissipation = Closure{n, ratio / per_nu};
  return cfg;
}

// ---------------------------------------------------------------------------

Outcome invariance_suite() {
  const auto t0 = Clock::now();
  const auto rows = certify_invariance(2024, 100, 100);
  double worst = 0.0;
  for (const InvarianceRecord& r : rows) worst = std::max(worst, r.residual);
  const double dt = seconds_since(t0);
  Outcome o{worst <= 1e-9 && dt <= 60.0, {}};
  o.notes.push_back(fmt("%zu field/element pairs, |a| <= 4, worst |dI|/(1+|I|) = %.2e (<= 1e-9), %.1f s (<= 60 s)",
                        rows.size(), worst, dt));
  return o;
}

Outcome syzygy_suite() {
  const auto t0 = Clock::now();
  std::vector<std::string> ids;
  for (const std::string& id : identity_ids())
    if (id.rfind("syzygy.", 0) == 0 || id.rfind("commutator.", 0) == 0 || id.rfind("generator.", 0) == 0)
      ids.push_back(id);
  const IdentitySummary s = certify_identities(ids, 77, 20, 20);
  const double dt = seconds_since(t0);
  // Every identity must actually be exercised at most points.
  int thinnest = 1 << 30;
  for (const std::string& id : ids) {
    const int n = static_cast<int>(std::count_if(s.records.begin(), s.records.end(),
                                                 [&](const IdentityRecord& r) { return r.id == id; }));
    thinnest = std::min(thinnest, n);
  }
  Outcome o{s.max_residual <= 1e-6 && thinnest >= 300 && dt <= 60.0, {}};
  o.notes.push_back(fmt("%zu identities x 20 fields x 20 points: %zu evaluated, %d outside domain", ids.size(),
                        s.records.size(), s.skipped));
  o.notes.push_back(fmt("worst residual %.2e (<= 1e-6), fewest points for one identity %d, %.1f s", s.max_residual,
                        thinnest, dt));
  return o;
}

Outcome arakawa_sums() {
  const Grid g(64, 64, 2.56e5, 2.56e5);
  double w_sum = 0, w_a = 0, w_b = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> n(0.0, 1.0);
    RealField a(g), b(g);
    for (double& v : a.values()) v = n(rng);
    for (double& v : b.values()) v = n(rng);
    const RealField j = arakawa_jacobian(a, b);
    double s = 0, sabs = 0, sa = 0, saabs = 0, sb = 0, sbabs = 0;
    for (std::size_t k = 0; k < j.size(); ++k) {
      s += j[k];
      sabs += std::abs(j[k]);
      sa += a[k] * j[k];
      saabs += std::abs(a[k] * j[k]);
      sb += b[k] * j[k];
      sbabs += std::abs(b[k] * j[k]);
    }
    w_sum = std::max(w_sum, std::abs(s) / sabs);
    w_a = std::max(w_a, std::abs(sa) / saabs);
    w_b = std::max(w_b, std::abs(sb) / sbabs);
  }
  Outcome o{std::max({w_sum, w_a, w_b}) <= 1e-12, {}};
  o.notes.push_back(fmt("white-noise a, b on 64x64, 100 seeds; worst relative sums: J %.1e, aJ %.1e, bJ %.1e", w_sum,
                        w_a, w_b));
  return o;
}

struct Drift {
  bool finite = false;
  double energy = 0.0, enstrophy = 0.0;
};

Drift inviscid_drift(const RunConfig& base, double dt, long steps) {
  RunConfig c = base;
  c.dt = dt;
  c.steps = steps;
  const SimulationResult r = simulate(c);
  Drift d;
  d.finite = r.status == SimulationResult::Status::completed;
  if (!d.finite) return d;
  const DiagnosticsRecord& h0 = r.history.front();
  for (const DiagnosticsRecord& h : r.history) {
    d.energy = std::max(d.energy, std::abs(h.energy - h0.energy) / h0.energy);
    d.enstrophy = std::max(d.enstrophy, std::abs(h.relative_enstrophy - h0.relative_enstrophy) / h0.relative_enstrophy);
  }
  return d;
}

Outcome inviscid_conservation() {
  RunConfig base = default_config(64);
  base.dissipation = closure::None{};
  base.raw_gamma = 0.0;
  const double dt_auto = auto_dt(initial_psi(base));

  // Unfiltered leapfrog has no margin at the CFL rule; locate the limit for
  // 1000 steps (finite, bounded energy) by bisection on dt / dt_auto.
  auto stable = [&](double f) {
    const Drift d = inviscid_drift(base, f * dt_auto, 1000);
    return d.finite && d.energy < 0.5;
  };
  double lo = 0.25, hi = 2.0;
  Outcome o;
  if (!stable(lo)) {
    o.notes.push_back("unstable even at a quarter of the CFL step");
    return o;
  }
  while (stable(hi)) hi *= 2;
  for (int it = 0; it < 8; ++it) (stable(0.5 * (lo + hi)) ? lo : hi) = 0.5 * (lo + hi);

  const double dt1 = 0.5 * lo * dt_auto;
  const Drift d1 = inviscid_drift(base, dt1, 1000);
  const Drift d2 = inviscid_drift(base, 0.5 * dt1, 2000);
  const double pe = std::log2(d1.energy / d2.energy), pz = std::log2(d1.enstrophy / d2.enstrophy);
  o.pass = d1.finite && d2.finite && d1.energy <= 1e-4 && d1.enstrophy <= 1e-4 && pe >= 1.8 && pz >= 1.8;
  o.notes.push_back(fmt("stability limit for 1000 steps ~%.3f x CFL step (%.1f s); runs at half of it", lo, dt_auto));
  o.notes.push_back(fmt("dt = %.2f s, 1000 steps: drift E %.2e, Z %.2e (<= 1e-4)", dt1, d1.energy, d1.enstrophy));
  o.notes.push_back(fmt("dt/2, 2000 steps (same span): drift E %.2e, Z %.2e; observed order E %.2f, Z %.2f (>= 1.8)",
                        d2.energy, d2.enstrophy, pe, pz));
  return o;
}

Outcome scale_contrast() {
  const auto t0 = Clock::now();
  const RunConfig base = default_config(64);
  const GroupElement gel = GroupElement::scaling(1.0);
  // Coefficients set by the dissipation to advection ratio at t = 0. The
  // classical term is mis-scaled by e^{5} in the image, which has to stay
  // inside the explicit diffusion limit, hence the smaller ratio.
  const RunConfig inv_cfg = with_ratio<closure::InvariantHyper>(base, 2, 0.05);
  const RunConfig cls_cfg = with_ratio<closure::Classical>(base, 2, 0.02);
  Outcome o;
  try {
    const EquivarianceReport inv = equivariance_experiment(inv_cfg, gel, 500);
    const EquivarianceReport cls = equivariance_experiment(cls_cfg, gel, 500);
    const double dt = seconds_since(t0);
    o.pass = inv.field_rel_err <= 1e-6 && inv.spectrum_rms_log_err <= 1e-6 &&
             cls.spectrum_rms_log_err >= 10 * inv.spectrum_rms_log_err && cls.spectrum_rms_log_err >= 1e-2 &&
             dt <= 120.0;
    o.notes.push_back(fmt("%s: field %.2e, spectrum %.2e (<= 1e-6)", describe(inv_cfg.dissipation).c_str(),
                          inv.field_rel_err, inv.spectrum_rms_log_err));
    o.notes.push_back(fmt("%s: field %.2e, spectrum %.2e (>= 1e-2 and >= 10x invariant), %.1f s",
                          describe(cls_cfg.dissipation).c_str(), cls.field_rel_err, cls.spectrum_rms_log_err, dt));
  } catch (const InstabilityError& e) {
    o.notes.push_back(std::string("instability: ") + e.what());
  }
  return o;
}

Outcome conservative_budgets() {
  Outcome o{true, {}};
  const auto rows = budget_convergence(closure::ConservativeSeventh{1.0}, {32, 64, 128});
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const Budget& b = rows[i].budget;
    o.pass &= std::abs(b.dGamma) <= 1e-12 && std::abs(b.rel_dGamma) <= 1e-12;
    std::string line = fmt("N=%3d  dGamma %.1e (rel %.1e)  rel dE %.2e  rel dM %.2e", rows[i].n, b.dGamma,
                           b.rel_dGamma, b.rel_dE, b.rel_dM);
    if (i > 0) {
      const Budget& c = rows[i - 1].budget;
      const double pe = observed_order(c.rel_dE, b.rel_dE), pm = observed_order(c.rel_dM, b.rel_dM);
      o.pass &= pe >= 2.0 && pm >= 2.0;
      line += fmt("  order E %.1f, M %.1f (>= 2)", pe, pm);
    }
    o.notes.push_back(line);
  }
  const auto cert = certify_divergence_identities(11, 20, 20);
  double worst[3] = {0, 0, 0};
  for (const CertificationRow& r : cert)
    worst[static_cast<int>(r.characteristic)] = std::max(worst[static_cast<int>(r.characteristic)], r.residual);
  o.pass &= std::max({worst[0], worst[1], worst[2]}) <= 1e-6;
  o.notes.push_back(fmt("divergence identities, 20 fields x 20 points: f %.1e, g y %.1e, psi %.1e (<= 1e-6)",
                        worst[0], worst[1], worst[2]));
  return o;
}

// Decaying invariant-hyperdiffusion runs. Each seed runs until the energy has
// dropped kDecayTolerance below its running maximum (the onset of net decay);
// the spectrum is taken at the maximum. Only decay after net growth counts: a
// run that loses energy from the start never reaches a decay onset.
constexpr int kDecayN = 256;
constexpr double kDecayK0 = 32.0;
constexpr double kDecayRatio = 0.10;
constexpr double kDecayDtFraction = 0.3;
constexpr long kDecayMaxSteps = 30000;
constexpr double kDecayTolerance = 1e-3;
constexpr int kFitLo = 8, kFitHi = 80;

struct DecayRun {
  std::uint64_t seed = 0;
  bool completed = false;
  bool decay_seen = false;
  long peak_step = 0, steps = 0;
  double growth = 0.0;
  double slope = 0.0;
  double seconds = 0.0;
};

std::vector<DecayRun>& decay_runs() {
  static std::vector<DecayRun> runs;
  if (!runs.empty()) return runs;
  RunConfig base = default_config(kDecayN);
  base.ic.k0 = kDecayK0;
  base = with_ratio<closure::InvariantHyper>(base, 2, kDecayRatio);
  for (std::uint64_t seed : {1, 2, 3}) {
    const auto t0 = Clock::now();
    RunConfig cfg = base;
    cfg.seed = seed;
    cfg.dt = kDecayDtFraction * auto_dt(initial_psi(cfg));
    cfg.steps = kDecayMaxSteps;
    DecayRun run{seed};
    double e0 = 0, emax = 0;
    std::optional<RealField> psi_peak;
    const SimulationResult r = simulate(cfg, [&](const SimState& s, const DiagnosticsRecord& d) {
      if (s.step == 0) e0 = d.energy;
      if (d.energy >= emax) {
        emax = d.energy;
        run.peak_step = s.step;
        psi_peak = s.psi_curr;
      }
      run.decay_seen = emax > (1.0 + kDecayTolerance) * e0 && d.energy < (1.0 - kDecayTolerance) * emax;
      return !run.decay_seen;
    });
    run.completed = r.status != SimulationResult::Status::unstable;
    run.steps = r.steps_completed;
    run.growth = emax / e0 - 1.0;
    run.slope = fit_slope(energy_spectrum(*psi_peak), kFitLo, kFitHi);
    run.seconds = seconds_since(t0);
    runs.push_back(run);
  }
  return runs;
}

std::string decay_setup() {
  return fmt("N=%d, k0=%g, invariant hyperdiffusion n=2 at %.0f%% of advection, dt = %.2f x CFL, <= %ld steps", kDecayN,
             kDecayK0, 100 * kDecayRatio, kDecayDtFraction, kDecayMaxSteps);
}

Outcome spectrum_slope() {
  Outcome o;
  o.notes.push_back(decay_setup());
  int inside = 0;
  double total = 0;
  for (const DecayRun& r : decay_runs()) {
    const bool ok = r.completed && r.decay_seen && r.slope >= -3.3 && r.slope <= -2.5;
    inside += ok;
    total += r.seconds;
    o.notes.push_back(fmt("seed %llu: %s, peak at step %ld of %ld, slope over shells %d-%d = %.2f %s",
                          static_cast<unsigned long long>(r.seed),
                          !r.completed ? "unstable" : r.decay_seen ? "decay onset reached" : "no decay onset",
                          r.peak_step, r.steps, kFitLo, kFitHi, r.slope, ok ? "inside" : "outside"));
  }
  o.pass = inside >= 2 && total <= 1200.0;
  o.notes.push_back(fmt("%d of 3 inside [-3.3, -2.5] at decay onset (>= 2), %.0f s (<= 1200 s)", inside, total));
  return o;
}

Outcome energy_transient() {
  Outcome o;
  int inside = 0;
  for (const DecayRun& r : decay_runs()) {
    const bool ok = r.completed && r.decay_seen && r.growth >= 0.05 && r.growth <= 0.30;
    inside += ok;
    o.notes.push_back(fmt("seed %llu: energy grew %.1f%% before %s", static_cast<unsigned long long>(r.seed),
                          100 * r.growth, r.decay_seen ? "decaying" : "the step cap"));
  }
  o.pass = inside >= 2;
  o.notes.push_back(fmt("%d of 3 with growth in [5%%, 30%%] followed by decay (>= 2)", inside));
  return o;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome determinism() {
  kernels::ThreadCountScope serial(1);
  const fs::path root = fs::temp_directory_path() / "bpv_acceptance_determinism";
  fs::remove_all(root);
  RunConfig cfg = default_config(64);
  cfg.steps = 200;
  cfg.dissipation = closure::InvariantHyper{2, 1e5};
  cfg.output = {50, 50, ""};
  for (const char* run : {"a", "b"}) {
    cfg.output.out_dir = (root / run).string();
    run_experiment(cfg);
  }
  Outcome o{true, {}};
  int files = 0;
  for (const auto& entry : fs::directory_iterator(root / "a")) {
    const std::string name = entry.path().filename().string();
    if (name == "manifest.json") continue;  // records wall time
    ++files;
    if (slurp(entry.path()) != slurp(root / "b" / name)) {
      o.pass = false;
      o.notes.push_back("differs: " + name);
    }
  }
  o.pass &= files >= 10;
  o.notes.push_back(fmt("two single-threaded runs, %d CSV and snapshot files compared byte for byte", files));
  fs::remove_all(root);
  return o;
}

std::set<int> parse_list(const std::string& s) {
  std::set<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.insert(std::stoi(item));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> only, allowed;
  for (int i = 1; i + 1 < argc; i += 2) {
    const std::string flag = argv[i];
    if (flag == "--only") only = parse_list(argv[i + 1]);
    else if (flag == "--allow-fail") allowed = parse_list(argv[i + 1]);
  }

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"invariance of normalized invariants", invariance_suite},
      {"syzygies, commutators and generator representations", syzygy_suite},
      {"Arakawa conservation sums", arakawa_sums},
      {"inviscid energy and enstrophy drift", inviscid_conservation},
      {"scale-equivariance contrast", scale_contrast},
      {"conservative closure budgets and divergence identities", conservative_budgets},
      {"decaying-run spectrum slope", spectrum_slope},
      {"decaying-run energy transient", energy_transient},
      {"byte determinism", determinism},
  };

  int hard_failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    if (!only.empty() && !only.count(id)) continue;
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.notes.push_back(std::string("exception: ") + e.what());
    }
    std::printf("%s %d %s\n", o.pass ? "PASS" : "FAIL", id, criteria[i].first.c_str());
    for (const std::string& n : o.notes) std::printf("    %s\n", n.c_str());
    std::fflush(stdout);
    if (!o.pass && !allowed.count(id)) ++hard_failures;
  }
  return hard_failures == 0 ? 0 : 1;
}
