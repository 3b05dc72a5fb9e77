#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bpv/config.hpp"
#include "bpv/diagnostics.hpp"
#include "bpv/dynamics.hpp"

namespace bpv {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInstability = 1;
inline constexpr int kExitConfigError = 2;

/// Environment variable that overrides output.out_dir.
inline constexpr const char* kOutDirEnv = "BPV_OUT_DIR";

/// Called after every level (step 0 included); returning false stops the run.
using StepObserver = std::function<bool(const SimState&, const DiagnosticsRecord&)>;

struct SimulationResult {
  enum class Status { completed, stopped, unstable };
  Status status = Status::completed;
  long steps_completed = 0;
  double dt = 0.0;
  std::string message;
  std::vector<DiagnosticsRecord> history;
  std::optional<SimState> final_state;  ///< last finite state
};

/// Initial stream function: cfg.initial_psi if set, otherwise generated.
RealField initial_psi(const RunConfig& cfg, std::vector<std::string>* warnings = nullptr);

/// Model parameters with dt resolved ("auto" uses the initial flow).
ModelParams model_params(const RunConfig& cfg, const RealField& psi0);

/// Runs cfg.steps steps in memory. Instability ends the run with status
/// `unstable` instead of throwing.
SimulationResult simulate(const RunConfig& cfg, const StepObserver& observer = {});

struct RunReport {
  int exit_code = kExitOk;
  std::string out_dir;
  SimulationResult sim;
};

/// Output directory after the environment override.
std::string resolve_out_dir(const RunConfig& cfg);

/// Runs and writes diagnostics.csv (every step), spectrum_<step>.csv and
/// psi_<step>.bpf at the configured cadence and at the end, and
/// manifest.json. On instability the last good level is kept on disk.
RunReport run_experiment(const RunConfig& cfg);

/// Shell spectrum of psi as a (k, E) CSV.
void write_spectrum(const std::string& path, const RealField& psi);

}  // namespace bpv
