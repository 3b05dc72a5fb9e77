#pragma once

#include <string>
#include <vector>

#include "bpv/config.hpp"
#include "bpv/grid.hpp"

namespace bpv {

/// Target shell spectrum k^p / (1 + k/k0)^q.
double ic_spectrum_shape(double k, const InitialConditionConfig& ic);

/// Gaussian random stream function with the configured shell spectrum:
/// independent standard-normal real and imaginary parts per mode,
/// conjugate-symmetric, Nyquist modes and the mean zeroed, rescaled so the
/// domain-averaged kinetic energy equals ic.amplitude. Appends a warning
/// when q <= p + 2 (tail does not decay).
RealField generate_initial_condition(const RunConfig& cfg, std::vector<std::string>* warnings = nullptr);

}  // namespace bpv
