#pragma once

#include <string>
#include <variant>

#include "bpv/grid.hpp"

namespace bpv {

namespace closure {

struct None {};
/// (-1)^{n-1} nu Lap^n zeta
struct Classical {
  int n = 2;
  double nu = 0.0;
};
/// (-1)^{n-1} nu |psi_x|^{(2n+1)/2} Lap^n zeta
struct InvariantHyper {
  int n = 2;
  double nu = 0.0;
};
/// K psi_x sqrt|psi_x| Lap zeta, i.e. K sqrt|psi_x| Lap zeta in the invariant form
struct DownGradientInvariant {
  double K = 0.0;
};
/// nu sqrt|psi_x| (eps J(psi_y, eta) + psi_x eta_yy), eta = zeta + beta y
struct AnticipatedInvariant {
  double nu = 0.0;
};
/// nu Lap(Lap(zeta^7)/zeta) = 7 nu Lap(zeta^5 Lap zeta + 6 zeta^4 |grad zeta|^2)
struct ConservativeSeventh {
  double nu = 0.0;
};
/// nu Lap zeta^4
struct ConservativeFourth {
  double nu = 0.0;
};
/// (-1)^{n-1} nu zeta^{2n+1} Lap^n zeta
struct IsotropicA {
  int n = 1;
  double nu = 0.0;
};
/// (-1)^{n-1} nu div(zeta^{2n+1} grad Lap^{n-1} zeta)
struct IsotropicB {
  int n = 1;
  double nu = 0.0;
};

}  // namespace closure

using DissipationSpec =
    std::variant<closure::None, closure::Classical, closure::InvariantHyper, closure::DownGradientInvariant,
                 closure::AnticipatedInvariant, closure::ConservativeSeventh, closure::ConservativeFourth,
                 closure::IsotropicA, closure::IsotropicB>;

/// Variant name as used in configuration files ("invariant_hyper", ...).
std::string spec_name(const DissipationSpec& spec);
/// Default-parameter spec for a name; throws ConfigError for unknown names.
DissipationSpec spec_from_name(const std::string& name);
/// Human-readable one-liner, e.g. "invariant_hyper(n=2, nu=1e-3)".
std::string describe(const DissipationSpec& spec);
/// Order n of hyperdiffusive variants (0 for the others).
int spec_order(const DissipationSpec& spec);

/// Throws ConfigError for n < 1 or negative coefficients.
void validate(const DissipationSpec& spec);

/// Closure term D(psi, zeta). `beta` is only used by AnticipatedInvariant.
/// Throws OverflowError when the result is not finite.
RealField dissipation(const DissipationSpec& spec, const RealField& psi, const RealField& zeta, double beta = 0.0);

}  // namespace bpv
