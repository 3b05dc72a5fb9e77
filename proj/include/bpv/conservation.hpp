#pragma once

#include <string>
#include <vector>

#include "bpv/dissipation.hpp"
#include "bpv/grid.hpp"
#include "bpv/invariants.hpp"
#include "bpv/jet.hpp"

namespace bpv {

/// Characteristic of a conservation law of the conservative seventh-power
/// closure: circulation f(t), x-momentum g(t) y, energy psi.
enum class Characteristic { f, gy, psi };

std::string characteristic_name(Characteristic c);
/// Throws ConfigError for anything but "f", "gy", "psi".
Characteristic characteristic_from_name(const std::string& name);

struct DivergenceOptions {
  double nu = 1.0;
  double beta = 1.0;
  /// Order of the jets the evaluation may use; at least 6 is needed.
  int jet_order = kMaxJetOrder;
  FdOptions fd{};  // step <= 0: a tenth of the invariant-derivative default
};

/// lambda L against D_t F^t + D_x F^x + D_y F^y, where
/// L = zeta_t + psi_x zeta_y - psi_y zeta_x + beta psi_x - nu Lap(Lap(zeta^7)/zeta).
/// The left side comes from exact jets, the divergence from Richardson
/// differences of fluxes that are themselves exact. Throws OrderError when
/// opt.jet_order is too small.
IdentityValue divergence_identity(Characteristic c, const AnalyticField& field, const TimeFunction& f,
                                  const TimeFunction& g, const SpacetimePoint& p, const DivergenceOptions& opt = {});

/// |LHS - RHS| / max(1, |LHS|).
double divergence_identity_residual(Characteristic c, const AnalyticField& field, const TimeFunction& f,
                                    const TimeFunction& g, const SpacetimePoint& p,
                                    const DivergenceOptions& opt = {});

/// Tendencies of the integrals contributed by the closure term alone.
struct Budget {
  double dE = 0.0;      ///< -sum psi D dA
  double dZ = 0.0;      ///< sum eta D dA
  double dGamma = 0.0;  ///< sum D dA
  double dM = 0.0;      ///< sum y D dA
  /// Scale-free versions: dE / (|psi|_2 |D|_2 dA), dGamma / sum |D| dA,
  /// dM / (|y|_2 |D|_2 dA). Zero when D vanishes.
  double rel_dE = 0.0;
  double rel_dGamma = 0.0;
  double rel_dM = 0.0;
};

Budget conservation_budget(const DissipationSpec& spec, const RealField& psi, const RealField& zeta, double beta);

/// Fixed smooth test stream function on an n x n grid of side 2 pi: a few
/// zonal harmonics under a Gaussian envelope centred at y = pi, narrow enough
/// that the field and every power of its vorticity vanish to rounding at the
/// y seam, where the non-periodic weight y jumps.
RealField budget_test_psi(int n);

struct BudgetRow {
  std::string spec;
  int n = 0;
  Budget budget;
};

/// Budgets of `spec` on budget_test_psi at each resolution.
std::vector<BudgetRow> budget_convergence(const DissipationSpec& spec, const std::vector<int>& resolutions,
                                          double beta = 0.0);

/// log2(coarse / fine) for a refinement by two. Returns +infinity once the
/// fine value is at the rounding floor (|fine| <= floor), so converged
/// studies count as passing.
double observed_order(double coarse, double fine, double floor = 1e-13);

void write_budget_csv(const std::string& path, const std::vector<BudgetRow>& rows);

struct CertificationRow {
  Characteristic characteristic;
  unsigned seed = 0;
  SpacetimePoint point;
  double residual = 0.0;
};

/// Divergence identities at `points` random points of `fields` random
/// four-term analytic fields, for every characteristic, with random
/// polynomial f, g of degree <= 4.
std::vector<CertificationRow> certify_divergence_identities(unsigned seed, int fields, int points,
                                                            const DivergenceOptions& opt = {});

void write_certification_csv(const std::string& path, const std::vector<CertificationRow>& rows);

}  // namespace bpv
