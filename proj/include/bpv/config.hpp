#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "bpv/dissipation.hpp"
#include "bpv/grid.hpp"

namespace bpv {

struct GridConfig {
  int nx = 128;
  int ny = 128;
  double lx = 2.56e5;
  double ly = 2.56e5;
};

struct InitialConditionConfig {
  std::string shape = "banded-gaussian";
  double k0 = 32.0;
  double p = 6.0;
  double q = 18.0;
  /// Domain-averaged kinetic energy of the initial field (m^2/s^2).
  double amplitude = 50.0;
};

struct OutputConfig {
  long snapshot_every = 0;  ///< 0: final snapshot only
  long spectrum_every = 0;  ///< 0: final spectrum only
  std::string out_dir = "out";
};

struct RunConfig {
  GridConfig grid;
  double beta = 1.6e-9;
  std::optional<double> dt;  ///< empty: "auto"
  long steps = 4320;
  double start_time = 0.0;
  DissipationSpec dissipation = closure::InvariantHyper{2, 0.0};
  double raw_gamma = 0.1;
  double raw_alpha = 0.53;
  double background_u = 0.0;
  std::uint64_t seed = 1;
  InitialConditionConfig ic;
  OutputConfig output;
  /// Replaces the generated initial condition (symmetry harness); never
  /// read from or written to configuration files.
  std::optional<RealField> initial_psi;

  Grid make_grid() const { return Grid(grid.nx, grid.ny, grid.lx, grid.ly); }
};

/// Checks value ranges; throws ConfigError listing every problem.
void validate(const RunConfig& cfg);

/// Strict parser for the `key = value` format with [section] headers.
/// Unknown keys, duplicates and malformed values are all reported in one
/// ConfigError.
RunConfig parse_config_text(const std::string& text);
RunConfig parse_config(const std::string& path);

/// Canonical text form; parse_config_text(format_config(c)) reproduces c.
std::string format_config(const RunConfig& cfg);

}  // namespace bpv
