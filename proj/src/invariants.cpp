#include "bpv/invariants.hpp"

#include <array>
#include <cmath>
#include <map>
#include <numbers>

#include <Eigen/Dense>

namespace bpv {

bool is_phantom(const MultiIndex& a) noexcept {
  if (a.x == 0 && a.y <= 1) return true;
  return a.t == 0 && a.x == 1 && a.y == 0;
}

double normalized_invariant(const Jet& z, const MultiIndex& a) {
  if (is_phantom(a)) throw PhantomIndexError("I_" + a.str() + " is a phantom invariant");
  if (z.order() < std::max(a.order(), 1))
    throw OrderError("I_" + a.str() + " needs a jet of order " + std::to_string(a.order()));
  const double psi_x = z(0, 1, 0);
  if (psi_x == 0.0) throw SingularFrameError("I_" + a.str() + " undefined: psi_x = 0");
  const double w = a.x + a.y - a.t - 3;
  return std::pow(std::abs(psi_x), 0.5 * w) * comoving_power(a.t, {0, a.x, a.y}).evaluate(z);
}

std::vector<MultiIndex> invariant_indices(int max_order) {
  std::vector<MultiIndex> out;
  for (const MultiIndex& a : Jet::indices(max_order))
    if (!is_phantom(a)) out.push_back(a);
  return out;
}

InvExpr operator+(InvExpr a, InvExpr b) {
  return InvExpr([a = std::move(a), b = std::move(b)](const AnalyticField& f, const SpacetimePoint& p) {
    return a(f, p) + b(f, p);
  });
}

InvExpr operator-(InvExpr a, InvExpr b) {
  return InvExpr([a = std::move(a), b = std::move(b)](const AnalyticField& f, const SpacetimePoint& p) {
    return a(f, p) - b(f, p);
  });
}

InvExpr operator*(InvExpr a, InvExpr b) {
  return InvExpr([a = std::move(a), b = std::move(b)](const AnalyticField& f, const SpacetimePoint& p) {
    return a(f, p) * b(f, p);
  });
}

InvExpr operator/(InvExpr a, InvExpr b) {
  return InvExpr([a = std::move(a), b = std::move(b)](const AnalyticField& f, const SpacetimePoint& p) {
    return a(f, p) / b(f, p);
  });
}

InvExpr operator*(double s, InvExpr a) {
  return InvExpr([s, a = std::move(a)](const AnalyticField& f, const SpacetimePoint& p) { return s * a(f, p); });
}

InvExpr constant_expr(double c) {
  return InvExpr([c](const AnalyticField&, const SpacetimePoint&) { return c; });
}

InvExpr invariant_expr(const MultiIndex& a) {
  if (is_phantom(a)) throw PhantomIndexError("I_" + a.str() + " is a phantom invariant");
  return InvExpr([a](const AnalyticField& f, const SpacetimePoint& p) {
    return normalized_invariant(analytic_jet(f, p, std::max(a.order(), 1)), a);
  });
}

InvExpr sign_expr() {
  return InvExpr([](const AnalyticField& f, const SpacetimePoint& p) {
    const double psi_x = f.derivative({0, 1, 0}, p);
    return psi_x > 0 ? 1.0 : psi_x < 0 ? -1.0 : 0.0;
  });
}

double fd_step(const AnalyticField& field, const FdOptions& opt) {
  if (opt.step > 0.0) return opt.step;
  const double k = field.max_frequency();
  return k > 0.0 ? 1e-3 * 2.0 * std::numbers::pi / k : 1e-3;
}

namespace {

SpacetimePoint displaced(SpacetimePoint p, Direction d, double h) {
  (d == Direction::t ? p.t : d == Direction::x ? p.x : p.y) += h;
  return p;
}

// Central difference along d with one Richardson level.
double total_derivative(const AnalyticField& f, const InvExpr& e, Direction d, const SpacetimePoint& p, double h) {
  auto central = [&](double s) { return (e(f, displaced(p, d, s)) - e(f, displaced(p, d, -s))) / (2.0 * s); };
  return (4.0 * central(0.5 * h) - central(h)) / 3.0;
}

void check_stencil(const AnalyticField& f, Direction d, const SpacetimePoint& p, double h, double sign) {
  for (double s : {-h, -0.5 * h, 0.5 * h, h}) {
    if (f.derivative({0, 1, 0}, displaced(p, d, s)) * sign <= 0.0)
      throw StencilCrossingError("psi_x changes sign within the difference stencil");
  }
}

}  // namespace

double invariant_derivative(const AnalyticField& field, const InvExpr& expr, Direction dir, const SpacetimePoint& p,
                            const FdOptions& opt) {
  const double h = fd_step(field, opt);
  const double psi_x = field.derivative({0, 1, 0}, p);
  if (psi_x == 0.0) throw SingularFrameError("invariant derivative undefined: psi_x = 0");
  const double sign = psi_x > 0 ? 1.0 : -1.0;
  const double root = std::sqrt(std::abs(psi_x));
  switch (dir) {
    case Direction::x:
      check_stencil(field, Direction::x, p, h, sign);
      return root * total_derivative(field, expr, Direction::x, p, h);
    case Direction::y:
      check_stencil(field, Direction::y, p, h, sign);
      return root * total_derivative(field, expr, Direction::y, p, h);
    case Direction::t: {
      check_stencil(field, Direction::t, p, h, sign);
      check_stencil(field, Direction::x, p, h, sign);
      const double psi_y = field.derivative({0, 0, 1}, p);
      const double dt = total_derivative(field, expr, Direction::t, p, h);
      const double dx = total_derivative(field, expr, Direction::x, p, h);
      return (dt - psi_y * dx) / root;
    }
  }
  return 0.0;
}

InvExpr inv_d(Direction dir, InvExpr expr, FdOptions opt) {
  return InvExpr([dir, e = std::move(expr), opt](const AnalyticField& f, const SpacetimePoint& p) {
    return invariant_derivative(f, e, dir, p, opt);
  });
}

double IdentityValue::residual() const { return std::abs(lhs - rhs); }

namespace {

struct SideExprs {
  InvExpr lhs;
  InvExpr rhs;
};

// Operators and invariants for one evaluation. The printed syzygies and split
// relations hold for psi_x > 0; with eps = sgn psi_x they become covariant
// under I_a -> eps^{1+a_y} I_a and D^i_y -> eps D^i_y (reflection y -> -y,
// psi -> -psi maps a psi_x < 0 region onto a psi_x > 0 one).
struct Builder {
  double eps;
  FdOptions opt;

  InvExpr I(int t, int x, int y) const { return invariant_expr({t, x, y}); }
  InvExpr E(int t, int x, int y) const {
    return (y % 2 == 0 ? eps : 1.0) * invariant_expr({t, x, y});
  }
  InvExpr c(double v) const { return constant_expr(v); }
  InvExpr Dt(InvExpr e) const { return inv_d(Direction::t, std::move(e), opt); }
  InvExpr Dx(InvExpr e) const { return inv_d(Direction::x, std::move(e), opt); }
  InvExpr Dy(InvExpr e) const { return inv_d(Direction::y, std::move(e), opt); }
  InvExpr Dyc(InvExpr e) const { return eps * inv_d(Direction::y, std::move(e), opt); }
};

struct Monomial {
  double coefficient;
  std::vector<MultiIndex> factors;
};

struct SplitRelation {
  Direction dir;
  MultiIndex of;
  std::vector<Monomial> rhs;
};

const std::map<std::string, SplitRelation>& split_table() {
  using D = Direction;
  static const std::map<std::string, SplitRelation> table = {
      {"split.DtI110", {D::t, {1, 1, 0}, {{1, {{2, 1, 0}}}, {-1.5, {{1, 1, 0}, {1, 1, 0}}}}}},
      {"split.DxI110",
       {D::x, {1, 1, 0}, {{1, {{1, 2, 0}}}, {-1.5, {{1, 1, 0}, {0, 2, 0}}}, {-1, {{0, 1, 1}, {0, 2, 0}}}}}},
      {"split.DyI110",
       {D::y, {1, 1, 0}, {{1, {{1, 1, 1}}}, {-1.5, {{1, 1, 0}, {0, 1, 1}}}, {-1, {{0, 2, 0}, {0, 0, 2}}}}}},
      {"split.DtI020", {D::t, {0, 2, 0}, {{1, {{1, 2, 0}}}, {-0.5, {{1, 1, 0}, {0, 2, 0}}}}}},
      {"split.DxI020", {D::x, {0, 2, 0}, {{1, {{0, 3, 0}}}, {-0.5, {{0, 2, 0}, {0, 2, 0}}}}}},
      {"split.DyI020", {D::y, {0, 2, 0}, {{1, {{0, 2, 1}}}, {-0.5, {{0, 1, 1}, {0, 2, 0}}}}}},
      {"split.DtI011", {D::t, {0, 1, 1}, {{1, {{1, 1, 1}}}, {-0.5, {{1, 1, 0}, {0, 1, 1}}}}}},
      {"split.DxI011", {D::x, {0, 1, 1}, {{1, {{0, 2, 1}}}, {-0.5, {{0, 1, 1}, {0, 2, 0}}}}}},
      {"split.DyI011", {D::y, {0, 1, 1}, {{1, {{0, 1, 2}}}, {-0.5, {{0, 1, 1}, {0, 1, 1}}}}}},
      {"split.DtI002", {D::t, {0, 0, 2}, {{1, {{1, 0, 2}}}, {-0.5, {{1, 1, 0}, {0, 0, 2}}}}}},
      {"split.DxI002", {D::x, {0, 0, 2}, {{1, {{0, 1, 2}}}, {-0.5, {{0, 2, 0}, {0, 0, 2}}}}}},
      {"split.DyI002", {D::y, {0, 0, 2}, {{1, {{0, 0, 3}}}, {-0.5, {{0, 1, 1}, {0, 0, 2}}}}}},
      {"split.DtI210", {D::t, {2, 1, 0}, {{1, {{3, 1, 0}}}, {-2, {{1, 1, 0}, {2, 1, 0}}}}}},
      {"split.DxI210",
       {D::x,
        {2, 1, 0},
        {{1, {{2, 2, 0}}},
         {-2, {{0, 2, 0}, {2, 1, 0}}},
         {-2, {{0, 1, 1}, {1, 2, 0}}},
         {1, {{0, 1, 1}, {0, 1, 1}, {0, 2, 0}}},
         {-1, {{1, 1, 1}, {0, 2, 0}}}}}},
      {"split.DyI210",
       {D::y,
        {2, 1, 0},
        {{1, {{2, 1, 1}}},
         {-2, {{0, 1, 1}, {2, 1, 0}}},
         {-2, {{0, 0, 2}, {1, 2, 0}}},
         {1, {{0, 0, 2}, {0, 1, 1}, {0, 2, 0}}},
         {-1, {{1, 0, 2}, {0, 2, 0}}}}}},
      {"split.DtI120", {D::t, {1, 2, 0}, {{1, {{2, 2, 0}}}, {-1, {{1, 1, 0}, {1, 2, 0}}}}}},
      {"split.DxI120",
       {D::x, {1, 2, 0}, {{1, {{1, 3, 0}}}, {-1, {{0, 2, 0}, {1, 2, 0}}}, {-1, {{0, 1, 1}, {0, 3, 0}}}}}},
      {"split.DyI120",
       {D::y, {1, 2, 0}, {{1, {{1, 2, 1}}}, {-1, {{0, 1, 1}, {1, 2, 0}}}, {-1, {{0, 0, 2}, {0, 3, 0}}}}}},
      {"split.DtI111", {D::t, {1, 1, 1}, {{1, {{2, 1, 1}}}, {-1, {{1, 1, 0}, {1, 1, 1}}}}}},
      {"split.DxI111",
       {D::x, {1, 1, 1}, {{1, {{1, 2, 1}}}, {-1, {{0, 2, 0}, {1, 1, 1}}}, {-1, {{0, 1, 1}, {0, 2, 1}}}}}},
      {"split.DyI111",
       {D::y, {1, 1, 1}, {{1, {{1, 1, 2}}}, {-1, {{0, 1, 1}, {1, 1, 1}}}, {-1, {{0, 0, 2}, {0, 2, 1}}}}}},
      {"split.DtI102", {D::t, {1, 0, 2}, {{1, {{2, 0, 2}}}, {-1, {{1, 1, 0}, {1, 0, 2}}}}}},
      {"split.DxI102",
       {D::x, {1, 0, 2}, {{1, {{1, 1, 2}}}, {-1, {{0, 2, 0}, {1, 0, 2}}}, {-1, {{0, 1, 1}, {0, 1, 2}}}}}},
      {"split.DyI102",
       {D::y, {1, 0, 2}, {{1, {{1, 0, 3}}}, {-1, {{0, 1, 1}, {1, 0, 2}}}, {-1, {{0, 0, 2}, {0, 1, 2}}}}}},
      {"split.DtI030", {D::t, {0, 3, 0}, {{1, {{1, 3, 0}}}}}},
      {"split.DxI030", {D::x, {0, 3, 0}, {{1, {{0, 4, 0}}}}}},
      {"split.DyI030", {D::y, {0, 3, 0}, {{1, {{0, 3, 1}}}}}},
      {"split.DtI021", {D::t, {0, 2, 1}, {{1, {{1, 2, 1}}}}}},
      {"split.DxI021", {D::x, {0, 2, 1}, {{1, {{0, 3, 1}}}}}},
      {"split.DyI021", {D::y, {0, 2, 1}, {{1, {{0, 2, 2}}}}}},
      {"split.DtI012", {D::t, {0, 1, 2}, {{1, {{1, 1, 2}}}}}},
      {"split.DxI012", {D::x, {0, 1, 2}, {{1, {{0, 2, 2}}}}}},
      {"split.DyI012", {D::y, {0, 1, 2}, {{1, {{0, 1, 3}}}}}},
      {"split.DtI003", {D::t, {0, 0, 3}, {{1, {{1, 0, 3}}}}}},
      {"split.DxI003", {D::x, {0, 0, 3}, {{1, {{0, 1, 3}}}}}},
      {"split.DyI003", {D::y, {0, 0, 3}, {{1, {{0, 0, 4}}}}}},
  };
  return table;
}

SideExprs split_identity(const SplitRelation& rel, const Builder& b) {
  auto E = [&](const MultiIndex& a) { return b.E(a.t, a.x, a.y); };
  InvExpr lhs = rel.dir == Direction::t   ? b.Dt(E(rel.of))
                : rel.dir == Direction::x ? b.Dx(E(rel.of))
                                          : b.Dyc(E(rel.of));
  InvExpr rhs = b.c(0.0);
  for (const Monomial& m : rel.rhs) {
    InvExpr term = b.c(m.coefficient);
    for (const MultiIndex& a : m.factors) term = term * E(a);
    rhs = rhs + term;
  }
  return {lhs, rhs};
}

constexpr double kDomainFloor = 1e-6;
constexpr double kReductionFloor = 3e-2;

SideExprs build_identity(const std::string& id, const Builder& b, const AnalyticField& field,
                         const SpacetimePoint& p) {
  if (auto it = split_table().find(id); it != split_table().end()) return split_identity(it->second, b);

  const double eps = b.eps;
  const double he = 0.5 * eps;
  if (id.rfind("syzygy.", 0) == 0) {
    const InvExpr I110 = b.E(1, 1, 0), I020 = b.E(0, 2, 0), I011 = b.E(0, 1, 1), I002 = b.E(0, 0, 2);
    if (id == "syzygy.1") return {b.Dt(I011) - b.Dyc(I110), I110 * I011 + I020 * I002};
    if (id == "syzygy.2") return {b.Dt(I020) - b.Dx(I110), I020 * (I110 + I011)};
    if (id == "syzygy.3") return {b.Dyc(I011) - b.Dx(I002), 0.5 * (I020 * I002) - 0.5 * (I011 * I011)};
    if (id == "syzygy.4") return {b.Dx(I011) - b.Dyc(I020), b.c(0.0)};
    if (id == "syzygy.5") {
      const InvExpr q = 1.5 * (I110 * I011) + I020 * I002;
      const InvExpr r = 0.5 * (b.Dt(I020 * I002) - I011 * I020 * I002) - (b.Dyc(q) + I011 * q) -
                        I011 * b.Dyc(I110) - I002 * b.Dyc(I020);
      return {b.Dyc(b.Dyc(I110)) - b.Dt(b.Dx(I002)), r};
    }
    if (id == "syzygy.6")
      return {b.Dyc(b.Dyc(I020)) - b.Dx(b.Dx(I002)), 0.5 * b.Dx(I020 * I002) - 0.5 * b.Dyc(I011 * I020)};
  }

  if (id.rfind("reduction.", 0) == 0) {
    const InvExpr I110 = b.E(1, 1, 0), I020 = b.E(0, 2, 0), I011 = b.E(0, 1, 1), I002 = b.E(0, 0, 2);
    const InvExpr q = (b.Dt(I020) - b.Dx(I110)) / I020 - I110;
    // Both sides divide by I_020 (the I_002 form twice), so difference noise
    // is amplified by 1/I_020^2; below this the check measures conditioning.
    if (std::abs(I020(field, p)) < kReductionFloor)
      throw DomainError("reduction requires |I_020| >= " + std::to_string(kReductionFloor));
    if (id == "reduction.I011") return {I011, q};
    if (id == "reduction.I002") return {I002, (b.Dt(q) - I110 * q) / I020 - b.Dyc(I110) / I020};
  }

  // Commutators and the generator forms carry eps explicitly.
  const InvExpr I110 = b.I(1, 1, 0), I020 = b.I(0, 2, 0), I011 = b.I(0, 1, 1), I002 = b.I(0, 0, 2);
  auto comm_tx = [&](const InvExpr& J) { return b.Dt(b.Dx(J)) - b.Dx(b.Dt(J)); };
  auto comm_ty = [&](const InvExpr& J) { return b.Dt(b.Dy(J)) - b.Dy(b.Dt(J)); };
  auto comm_xy = [&](const InvExpr& J) { return b.Dx(b.Dy(J)) - b.Dy(b.Dx(J)); };
  if (id == "commutator.tx")
    return {comm_tx(I020), he * (I020 * b.Dt(I020)) + (I011 + he * I110) * b.Dx(I020)};
  if (id == "commutator.ty")
    return {comm_ty(I020), he * (I011 * b.Dt(I020)) + I002 * b.Dx(I020) + he * (I110 * b.Dy(I020))};
  if (id == "commutator.xy") return {comm_xy(I020), he * (I020 * b.Dy(I020)) - he * (I011 * b.Dx(I020))};

  if (id.rfind("generator.", 0) == 0) {
    const InvExpr dx = b.Dx(I020);
    if (std::abs(dx(field, p)) < kDomainFloor)
      throw DomainError("generator representation requires D^i_x I_020 != 0");
    if (id == "generator.I011") return {I011, (I020 * b.Dy(I020) - (2.0 * eps) * comm_xy(I020)) / dx};
    if (id == "generator.I110")
      return {I110, ((2.0 * eps) * comm_tx(I020) - I020 * b.Dt(I020)) / dx - (2.0 * eps) * I011};
    if (id == "generator.I002")
      return {I002, comm_ty(I020) / dx - he * ((b.Dt(I020) / dx) * I011) - he * ((b.Dy(I020) / dx) * I110)};
  }
  throw ConfigError("unknown identity '" + id + "'");
}

}  // namespace

std::vector<std::string> identity_ids() {
  std::vector<std::string> ids = {"syzygy.1",       "syzygy.2",       "syzygy.3",       "syzygy.4",
                                  "syzygy.5",       "syzygy.6",       "commutator.tx",  "commutator.ty",
                                  "commutator.xy",  "generator.I011",  "generator.I110",  "generator.I002",
                                  "reduction.I011", "reduction.I002"};
  for (const auto& [id, rel] : split_table()) ids.push_back(id);
  return ids;
}

IdentityValue evaluate_identity(const std::string& id, const AnalyticField& field, const SpacetimePoint& p,
                                const FdOptions& opt) {
  const double psi_x = field.derivative({0, 1, 0}, p);
  if (psi_x == 0.0) throw SingularFrameError("identity undefined: psi_x = 0");
  const Builder b{psi_x > 0 ? 1.0 : -1.0, opt};
  const SideExprs sides = build_identity(id, b, field, p);
  return {sides.lhs(field, p), sides.rhs(field, p)};
}

double check_syzygy(const std::string& id, const AnalyticField& field, const SpacetimePoint& p,
                    const FdOptions& opt) {
  return evaluate_identity(id, field, p, opt).residual();
}

namespace {

struct VorticityJet {
  double zt, zx, zy, psi_x, psi_y;
};

VorticityJet vorticity_jet(const Jet& z) {
  if (z.order() < 3) throw OrderError("vorticity residual needs a jet of order >= 3");
  return {z(1, 2, 0) + z(1, 0, 2), z(0, 3, 0) + z(0, 1, 2), z(0, 2, 1) + z(0, 0, 3), z(0, 1, 0), z(0, 0, 1)};
}

}  // namespace

double invariant_representation_residual(const Jet& z, double beta) {
  const VorticityJet v = vorticity_jet(z);
  if (v.psi_x == 0.0) throw SingularFrameError("invariant representation undefined: psi_x = 0");
  return (v.zt - v.psi_y * v.zx) / v.psi_x + v.zy + beta;
}

double raw_vorticity_residual(const Jet& z, double beta) {
  const VorticityJet v = vorticity_jet(z);
  return v.zt + v.psi_x * v.zy - v.psi_y * v.zx + beta * v.psi_x;
}

IndependenceReport generator_jacobian(const Jet& z) {
  static constexpr std::array<MultiIndex, 4> kGenerators = {{{1, 1, 0}, {0, 2, 0}, {0, 1, 1}, {0, 0, 2}}};
  static constexpr std::array<MultiIndex, 4> kCoordinates = {{{1, 1, 0}, {0, 2, 0}, {0, 1, 1}, {0, 0, 2}}};
  if (z.order() < 2) throw OrderError("generator Jacobian needs a jet of order >= 2");
  Eigen::Matrix4d jac;
  for (int col = 0; col < 4; ++col) {
    const double v = z(kCoordinates[col]);
    const double h = 1e-6 * (1.0 + std::abs(v));
    Jet plus = z, minus = z;
    plus.at(kCoordinates[col]) = v + h;
    minus.at(kCoordinates[col]) = v - h;
    for (int row = 0; row < 4; ++row)
      jac(row, col) = (normalized_invariant(plus, kGenerators[row]) - normalized_invariant(minus, kGenerators[row])) /
                      (2.0 * h);
  }
  const Eigen::JacobiSVD<Eigen::Matrix4d> svd(jac);
  const auto& s = svd.singularValues();
  return {jac.determinant(), s(3) > 0.0 ? s(0) / s(3) : std::numeric_limits<double>::infinity()};
}

}  // namespace bpv
