// bpv: command-line front end for runs, symmetry checks and certification.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <variant>

#include "bpv/certify.hpp"
#include "bpv/config.hpp"
#include "bpv/conservation.hpp"
#include "bpv/errors.hpp"
#include "bpv/experiment.hpp"
#include "bpv/initial_condition.hpp"
#include "bpv/snapshot.hpp"
#include "bpv/symmetry.hpp"

namespace fs = std::filesystem;
using namespace bpv;

namespace {

constexpr int kExitCheckFailed = 1;

// Kind from the command line; parameters from the config when it already
// uses that kind, then --n / --nu overrides.
DissipationSpec pick_spec(const RunConfig& cfg, const std::string& name, int n, double nu) {
  DissipationSpec spec = spec_name(cfg.dissipation) == name ? cfg.dissipation : spec_from_name(name);
  std::visit(
      [&](auto& s) {
        if constexpr (requires { s.n; })
          if (n > 0) s.n = n;
        if constexpr (requires { s.nu; })
          if (nu >= 0) s.nu = nu;
        if constexpr (requires { s.K; })
          if (nu >= 0) s.K = nu;
      },
      spec);
  validate(spec);
  return spec;
}

std::string out_path(const std::string& dir, const std::string& file) {
  fs::create_directories(dir);
  return (fs::path(dir) / file).string();
}

int cmd_run(const std::string& path) {
  const RunReport r = run_experiment(parse_config(path));
  std::printf("%s: %ld steps, dt = %.6g -> %s\n",
              r.exit_code == kExitOk ? "completed" : "unstable", r.sim.steps_completed, r.sim.dt,
              r.out_dir.c_str());
  if (!r.sim.message.empty()) std::fprintf(stderr, "%s\n", r.sim.message.c_str());
  return r.exit_code;
}

int cmd_ic(const std::string& path) {
  const RunConfig cfg = parse_config(path);
  std::vector<std::string> warnings;
  const RealField psi = initial_psi(cfg, &warnings);
  for (const std::string& w : warnings) std::fprintf(stderr, "warning: %s\n", w.c_str());
  const std::string dir = resolve_out_dir(cfg);
  write_snapshot(out_path(dir, "ic.bpf"), psi, cfg.start_time);
  write_spectrum(out_path(dir, "ic_spectrum.csv"), psi);
  std::printf("initial condition -> %s\n", dir.c_str());
  return kExitOk;
}

int cmd_equivariance(const std::string& path, double eps1, const std::string& spec, long steps, int n, double nu) {
  RunConfig cfg = parse_config(path);
  cfg.dissipation = pick_spec(cfg, spec, n, nu);
  if (steps > 0) cfg.steps = steps;
  const GroupElement gel = GroupElement::scaling(eps1);
  const EquivarianceReport r = equivariance_experiment(cfg, gel, cfg.steps);
  const std::string dir = resolve_out_dir(cfg);
  write_equivariance_csv(out_path(dir, "equivariance.csv"), gel, cfg, r);
  std::printf("%s eps1=%g steps=%ld field_rel_err=%.3e spectrum_rms_log_err=%.3e\n", describe(cfg.dissipation).c_str(),
              eps1, r.steps, r.field_rel_err, r.spectrum_rms_log_err);
  return kExitOk;
}

int cmd_certify_invariants(unsigned seed, int fields, int elements, int points, const std::string& dir) {
  const auto inv = certify_invariance(seed, fields, elements);
  write_invariance_csv(out_path(dir, "invariance.csv"), inv);
  double worst = 0.0;
  for (const InvarianceRecord& r : inv) worst = std::max(worst, r.residual);
  const bool inv_ok = worst <= 1e-9;
  std::printf("invariance: %zu field/element pairs, max residual %.3e %s\n", inv.size(), worst,
              inv_ok ? "ok" : "FAILED");

  const IdentitySummary ids = certify_identities(identity_ids(), seed, fields, points);
  write_identity_csv(out_path(dir, "identities.csv"), ids.records);
  const bool id_ok = ids.max_residual <= 1e-6;
  std::printf("identities: %zu checks, %d outside domain, max residual %.3e %s\n", ids.records.size(), ids.skipped,
              ids.max_residual, id_ok ? "ok" : "FAILED");
  return inv_ok && id_ok ? kExitOk : kExitCheckFailed;
}

int cmd_certify_conservation(unsigned seed, int fields, int points, const std::string& dir) {
  const auto rows = certify_divergence_identities(seed, fields, points);
  write_certification_csv(out_path(dir, "divergence_identities.csv"), rows);
  double worst = 0.0;
  for (const CertificationRow& r : rows) worst = std::max(worst, r.residual);
  bool ok = worst <= 1e-6;
  std::printf("divergence identities: %zu checks, max residual %.3e %s\n", rows.size(), worst, ok ? "ok" : "FAILED");

  std::vector<BudgetRow> budgets;
  for (DissipationSpec spec : {DissipationSpec{closure::ConservativeSeventh{1.0}},
                               DissipationSpec{closure::ConservativeFourth{1.0}}}) {
    const auto b = budget_convergence(spec, {32, 64, 128});
    budgets.insert(budgets.end(), b.begin(), b.end());
    for (std::size_t i = 0; i < b.size(); ++i) {
      std::printf("  %-22s N=%-4d rel_dE %.2e  rel_dGamma %.2e  rel_dM %.2e", spec_name(spec).c_str(), b[i].n,
                  b[i].budget.rel_dE, b[i].budget.rel_dGamma, b[i].budget.rel_dM);
      if (i > 0)
        std::printf("  order E %.2f M %.2f", observed_order(b[i - 1].budget.rel_dE, b[i].budget.rel_dE),
                    observed_order(b[i - 1].budget.rel_dM, b[i].budget.rel_dM));
      std::printf("\n");
    }
  }
  write_budget_csv(out_path(dir, "budgets.csv"), budgets);
  return ok ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Barotropic vorticity beta-plane simulator and verification tools"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("bpv ") + BPV_VERSION);

  std::string config;
  auto* run = app.add_subcommand("run", "Run an experiment and write CSV, snapshots and a manifest");
  run->add_option("config", config, "Configuration file")->required()->check(CLI::ExistingFile);

  auto* ic = app.add_subcommand("ic", "Write the initial condition snapshot and its spectrum");
  ic->add_option("config", config, "Configuration file")->required()->check(CLI::ExistingFile);

  double eps1 = 1.0, nu = -1.0;
  std::string spec = "invariant_hyper";
  long steps = 0;
  int order = 0;
  auto* eq = app.add_subcommand("equivariance", "Compare a run with its scaled image");
  eq->add_option("config", config, "Configuration file")->required()->check(CLI::ExistingFile);
  eq->add_option("--eps1", eps1, "Scaling parameter")->required();
  eq->add_option("--spec", spec, "Dissipation variant name")->required();
  eq->add_option("--steps", steps, "Override the step count");
  eq->add_option("--n", order, "Override the hyperdiffusion order");
  eq->add_option("--nu", nu, "Override the dissipation coefficient");

  unsigned seed = 1;
  int fields = 100, elements = 100, points = 20;
  std::string dir = "certification";
  auto* ci = app.add_subcommand("certify-invariants", "Invariance and syzygy certification on random fields");
  ci->add_option("--seed", seed);
  ci->add_option("--fields", fields)->check(CLI::PositiveNumber);
  ci->add_option("--elements", elements, "Group elements per field")->check(CLI::PositiveNumber);
  ci->add_option("--points", points, "Identity points per field")->check(CLI::PositiveNumber);
  ci->add_option("--out", dir);

  int cfields = 20, cpoints = 20;
  auto* cc = app.add_subcommand("certify-conservation", "Divergence identities and discrete budget convergence");
  cc->add_option("--seed", seed);
  cc->add_option("--fields", cfields)->check(CLI::PositiveNumber);
  cc->add_option("--points", cpoints)->check(CLI::PositiveNumber);
  cc->add_option("--out", dir);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitConfigError;
  }

  try {
    if (*run) return cmd_run(config);
    if (*ic) return cmd_ic(config);
    if (*eq) return cmd_equivariance(config, eps1, spec, steps, order, nu);
    if (*ci) return cmd_certify_invariants(seed, fields, elements, points, dir);
    if (*cc) return cmd_certify_conservation(seed, cfields, cpoints, dir);
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const InstabilityError& e) {
    std::cerr << "instability: " << e.what() << "\n";
    return kExitInstability;
  } catch (const OverflowError& e) {
    std::cerr << "instability: " << e.what() << "\n";
    return kExitInstability;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfigError;
  }
  return kExitOk;
}
