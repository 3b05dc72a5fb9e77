#pragma once

#include <functional>
#include <string>
#include <vector>

#include "bpv/diffpoly.hpp"
#include "bpv/jet.hpp"

namespace bpv {

bool is_phantom(const MultiIndex& a) noexcept;

/// Normalized invariant I_a = |psi_x|^{(a_x + a_y - a_t - 3)/2} (D_t - psi_y D_x)^{a_t} psi_{0 a_x a_y}.
double normalized_invariant(const Jet& z, const MultiIndex& a);

/// Non-phantom multi-indices of order <= r.
std::vector<MultiIndex> invariant_indices(int max_order);

/// A differential function evaluated on an analytic field at a point.
class InvExpr {
 public:
  using Fn = std::function<double(const AnalyticField&, const SpacetimePoint&)>;

  InvExpr() = default;
  InvExpr(Fn fn) : fn_(std::move(fn)) {}  // NOLINT(google-explicit-constructor)

  double operator()(const AnalyticField& field, const SpacetimePoint& p) const { return fn_(field, p); }

  friend InvExpr operator+(InvExpr a, InvExpr b);
  friend InvExpr operator-(InvExpr a, InvExpr b);
  friend InvExpr operator*(InvExpr a, InvExpr b);
  friend InvExpr operator/(InvExpr a, InvExpr b);
  friend InvExpr operator*(double s, InvExpr a);

 private:
  Fn fn_;
};

InvExpr constant_expr(double c);
/// I_a as an expression.
InvExpr invariant_expr(const MultiIndex& a);
/// sgn(psi_x) as an expression.
InvExpr sign_expr();

/// Finite-difference settings for total derivatives of expressions.
struct FdOptions {
  /// Base step; <= 0 selects 1e-3 times the shortest wavelength of the field.
  double step = 0.0;
};

double fd_step(const AnalyticField& field, const FdOptions& opt = {});

/// Operator of invariant differentiation applied to an expression:
///   D^i_t = (D_t - psi_y D_x)/sqrt|psi_x|, D^i_x = sqrt|psi_x| D_x, D^i_y = sqrt|psi_x| D_y.
/// Total derivatives use central differences with one Richardson level.
double invariant_derivative(const AnalyticField& field, const InvExpr& expr, Direction dir,
                            const SpacetimePoint& p, const FdOptions& opt = {});

/// Same operator as a composable expression.
InvExpr inv_d(Direction dir, InvExpr expr, FdOptions opt = {});

/// Identities certified numerically. `syzygy.*` are the six lower-order
/// syzygies, `commutator.*` the commutation relations applied to a test
/// invariant, `generator.*` the representations through I_020 alone and
/// `split.*` first-order recurrence relations.
std::vector<std::string> identity_ids();

struct IdentityValue {
  double lhs = 0.0;
  double rhs = 0.0;
  double residual() const;
};

/// Throws DomainError when a domain condition of the identity fails.
IdentityValue evaluate_identity(const std::string& id, const AnalyticField& field, const SpacetimePoint& p,
                                const FdOptions& opt = {});

/// |LHS - RHS| of the identity.
double check_syzygy(const std::string& id, const AnalyticField& field, const SpacetimePoint& p,
                    const FdOptions& opt = {});

/// (zeta_t - psi_y zeta_x)/psi_x + zeta_y + beta.
double invariant_representation_residual(const Jet& z, double beta);
/// zeta_t + psi_x zeta_y - psi_y zeta_x + beta psi_x.
double raw_vorticity_residual(const Jet& z, double beta);

struct IndependenceReport {
  double determinant = 0.0;
  double condition_number = 0.0;
};

/// Jacobian of (I_110, I_020, I_011, I_002) with respect to
/// (psi_tx, psi_xx, psi_xy, psi_yy).
IndependenceReport generator_jacobian(const Jet& z);

}  // namespace bpv
