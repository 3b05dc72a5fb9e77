#include "bpv/experiment.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "bpv/csv.hpp"
#include "bpv/initial_condition.hpp"
#include "bpv/kernels.hpp"
#include "bpv/snapshot.hpp"

#ifndef BPV_VERSION
#define BPV_VERSION "unknown"
#endif

namespace bpv {

RealField initial_psi(const RunConfig& cfg, std::vector<std::string>* warnings) {
  if (cfg.initial_psi) {
    if (!(cfg.initial_psi->grid() == cfg.make_grid()))
      throw ConfigError("initial_psi override does not match the configured grid");
    return *cfg.initial_psi;
  }
  return generate_initial_condition(cfg, warnings);
}

ModelParams model_params(const RunConfig& cfg, const RealField& psi0) {
  ModelParams p;
  p.beta = cfg.beta;
  p.dissipation = cfg.dissipation;
  p.raw_gamma = cfg.raw_gamma;
  p.raw_alpha = cfg.raw_alpha;
  p.background_u = cfg.background_u;
  p.dt = cfg.dt ? *cfg.dt : auto_dt(psi0, cfg.background_u);
  validate(p);
  return p;
}

namespace {

DiagnosticsRecord record(const SimState& s, const RunConfig& cfg) {
  DiagnosticsRecord r = integrals(s.psi_curr, s.zeta_curr, cfg.beta);
  r.time = cfg.start_time + s.time;
  return r;
}

}  // namespace

SimulationResult simulate(const RunConfig& cfg, const StepObserver& observer) {
  validate(cfg);
  const RealField psi0 = initial_psi(cfg);
  const ModelParams params = model_params(cfg, psi0);
  SimulationResult res;
  res.dt = params.dt;
  SimState state = initial_state(psi0);
  auto emit = [&](const SimState& s) {
    res.history.push_back(record(s, cfg));
    return !observer || observer(s, res.history.back());
  };
  if (!emit(state)) {
    res.status = SimulationResult::Status::stopped;
    res.final_state = std::move(state);
    return res;
  }
  try {
    state = bootstrap(state.zeta_curr, params);
    bool go = emit(state);
    while (go && state.step < cfg.steps) {
      state = step_leapfrog_raw(state, params);
      go = emit(state);
    }
    res.status = go ? SimulationResult::Status::completed : SimulationResult::Status::stopped;
  } catch (const InstabilityError& e) {
    res.status = SimulationResult::Status::unstable;
    res.message = e.what();
  } catch (const OverflowError& e) {
    res.status = SimulationResult::Status::unstable;
    res.message = e.what();
  }
  res.steps_completed = state.step;
  res.final_state = std::move(state);
  return res;
}

std::string resolve_out_dir(const RunConfig& cfg) {
  if (const char* env = std::getenv(kOutDirEnv); env && *env) return env;
  return cfg.output.out_dir;
}

namespace {

std::string step_name(const std::string& stem, long step, const std::string& ext) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%06ld", step);
  return stem + "_" + buf + ext;
}

}  // namespace

void write_spectrum(const std::string& path, const RealField& psi) {
  const SpectrumResult s = energy_spectrum(psi);
  CsvWriter w(path, {"k", "E"});
  for (std::size_t i = 0; i < s.k.size(); ++i) {
    w.cell(static_cast<long>(s.k[i])).cell(s.E[i]);
    w.end_row();
  }
}

RunReport run_experiment(const RunConfig& cfg) {
  namespace fs = std::filesystem;
  const auto wall0 = std::chrono::steady_clock::now();
  RunReport rep;
  rep.out_dir = resolve_out_dir(cfg);
  fs::create_directories(rep.out_dir);
  const fs::path dir(rep.out_dir);

  std::vector<std::string> warnings;
  RunConfig run = cfg;
  if (!run.initial_psi) run.initial_psi = initial_psi(cfg, &warnings);

  CsvWriter diag((dir / "diagnostics.csv").string(), {"step", "time", "E", "Z", "Gamma", "M"});
  auto write_level = [&](const SimState& s) {
    write_snapshot((dir / step_name("psi", s.step, ".bpf")).string(), s.psi_curr, cfg.start_time + s.time);
    write_spectrum((dir / step_name("spectrum", s.step, ".csv")).string(), s.psi_curr);
  };
  StepObserver obs = [&](const SimState& s, const DiagnosticsRecord& r) {
    diag.cell(s.step).cell(r.time).cell(r.energy).cell(r.enstrophy).cell(r.circulation).cell(r.x_momentum);
    diag.end_row();
    const long se = cfg.output.snapshot_every, pe = cfg.output.spectrum_every;
    if (se > 0 && s.step % se == 0)
      write_snapshot((dir / step_name("psi", s.step, ".bpf")).string(), s.psi_curr, r.time);
    if (pe > 0 && s.step % pe == 0) write_spectrum((dir / step_name("spectrum", s.step, ".csv")).string(), s.psi_curr);
    return true;
  };
  rep.sim = simulate(run, obs);
  diag.flush();
  write_level(*rep.sim.final_state);
  rep.exit_code = rep.sim.status == SimulationResult::Status::unstable ? kExitInstability : kExitOk;

  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - wall0).count();
  nlohmann::ordered_json m;
  m["code_version"] = BPV_VERSION;
  m["config"] = format_config(cfg);
  m["dt"] = rep.sim.dt;
  m["dt_rule"] = cfg.dt ? "fixed" : "auto: 0.4 min(dx, dy) / max|grad psi| at t = 0";
  m["status"] = rep.sim.status == SimulationResult::Status::unstable ? "unstable" : "completed";
  m["message"] = rep.sim.message;
  m["steps_completed"] = rep.sim.steps_completed;
  m["threads"] = kernels::max_threads();
  m["warnings"] = warnings;
  m["wall_time_s"] = wall;
  std::ofstream((dir / "manifest.json").string(), std::ios::binary) << m.dump(2) << "\n";
  return rep;
}

}  // namespace bpv
