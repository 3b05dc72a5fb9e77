#include "bpv/conservation.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "bpv/csv.hpp"
#include "bpv/errors.hpp"
#include "bpv/sampling.hpp"
#include "bpv/spectral.hpp"
#include "bpv/taylor.hpp"

namespace bpv {

std::string characteristic_name(Characteristic c) {
  switch (c) {
    case Characteristic::f: return "f";
    case Characteristic::gy: return "gy";
    case Characteristic::psi: return "psi";
  }
  return "?";
}

Characteristic characteristic_from_name(const std::string& name) {
  if (name == "f") return Characteristic::f;
  if (name == "gy") return Characteristic::gy;
  if (name == "psi") return Characteristic::psi;
  throw ConfigError("unknown characteristic '" + name + "' (expected f, gy or psi)");
}

namespace {

constexpr int kFluxOrder = 5;
constexpr int kLhsOrder = 6;

// psi, zeta and W = Lap(zeta^7)/zeta = 7 zeta^5 Lap zeta + 42 zeta^4 |grad zeta|^2
// as Taylor polynomials about one point.
struct Fields {
  TaylorJet psi;
  TaylorJet zeta;
  TaylorJet w;
};

TaylorJet power(const TaylorJet& u, int k) {
  TaylorJet out(u.order(), 1.0);
  for (int i = 0; i < k; ++i) out = out * u;
  return out;
}

Fields taylor_fields(const AnalyticField& field, const SpacetimePoint& p, int order) {
  const Jet z = analytic_jet(field, p, order);
  TaylorJet psi = TaylorJet::from_jet(z);
  TaylorJet zeta = laplacian(psi);
  const TaylorJet zx = zeta.diff(Direction::x), zy = zeta.diff(Direction::y);
  const TaylorJet z4 = power(zeta, 4);
  TaylorJet w = 7.0 * (z4 * zeta * laplacian(zeta)) + 42.0 * (z4 * (zx * zx + zy * zy));
  return {std::move(psi), std::move(zeta), std::move(w)};
}

using Flux = std::array<double, 3>;

Flux flux(Characteristic c, const AnalyticField& field, const TimeFunction& f, const TimeFunction& g,
          const SpacetimePoint& p, double nu, double beta) {
  const Fields u = taylor_fields(field, p, kFluxOrder);
  auto d = [](const TaylorJet& v, int t, int x, int y) { return v.derivative({t, x, y}); };
  const double psi = u.psi.value();
  const double px = d(u.psi, 0, 1, 0), py = d(u.psi, 0, 0, 1), pt = d(u.psi, 1, 0, 0);
  const double pxt = d(u.psi, 1, 1, 0), pyt = d(u.psi, 1, 0, 1);
  const double pxx = d(u.psi, 0, 2, 0), pxy = d(u.psi, 0, 1, 1);
  const double zeta = u.zeta.value(), zx = d(u.zeta, 0, 1, 0), zy = d(u.zeta, 0, 0, 1);
  const double w = u.w.value(), wx = d(u.w, 0, 1, 0), wy = d(u.w, 0, 0, 1);
  switch (c) {
    case Characteristic::f: {
      const double ft = f(p.t);
      return {0.0, ft * (pxt + psi * zy + beta * psi - nu * wx), ft * (pyt - psi * zx - nu * wy)};
    }
    case Characteristic::gy: {
      const double gt = g(p.t), gy = gt * p.y;
      return {0.0,
              gy * (pxt + psi * zy + beta * psi - nu * wx) - 0.5 * gt * py * py + gt * (psi * pxx - 0.5 * px * px),
              gy * (pyt - psi * zx - nu * wy) - gt * pt + gt * psi * pxy + nu * gt * w};
    }
    case Characteristic::psi: {
      const double z6 = std::pow(zeta, 6);
      return {-0.5 * (px * px + py * py),
              psi * pxt + 0.5 * psi * psi * zy + 0.5 * beta * psi * psi - nu * psi * wx + nu * px * w -
                  7.0 * nu * z6 * zx,
              psi * pyt - 0.5 * psi * psi * zx - nu * psi * wy + nu * py * w - 7.0 * nu * z6 * zy};
    }
  }
  return {0.0, 0.0, 0.0};
}

SpacetimePoint displaced(SpacetimePoint p, int axis, double s) {
  (axis == 0 ? p.t : axis == 1 ? p.x : p.y) += s;
  return p;
}

}  // namespace

IdentityValue divergence_identity(Characteristic c, const AnalyticField& field, const TimeFunction& f,
                                  const TimeFunction& g, const SpacetimePoint& p, const DivergenceOptions& opt) {
  if (opt.jet_order < kLhsOrder)
    throw OrderError("divergence identities need jets of order " + std::to_string(kLhsOrder) + ", got " +
                     std::to_string(opt.jet_order));
  const Fields u = taylor_fields(field, p, kLhsOrder);
  const double d_term = opt.nu * laplacian(u.w).value();
  const double L = u.zeta.derivative({1, 0, 0}) + u.psi.derivative({0, 1, 0}) * u.zeta.derivative({0, 0, 1}) -
                   u.psi.derivative({0, 0, 1}) * u.zeta.derivative({0, 1, 0}) +
                   opt.beta * u.psi.derivative({0, 1, 0}) - d_term;
  double lambda = 0.0;
  switch (c) {
    case Characteristic::f: lambda = f(p.t); break;
    case Characteristic::gy: lambda = g(p.t) * p.y; break;
    case Characteristic::psi: lambda = u.psi.value(); break;
  }

  // Fluxes carry up to seventh powers of zeta, so their effective wavenumber
  // is several times the field's; the invariant-derivative default is too coarse.
  const double h = opt.fd.step > 0.0 ? opt.fd.step : 0.1 * fd_step(field);
  double div = 0.0;
  for (int axis = 0; axis < 3; ++axis) {
    auto central = [&](double s) {
      const Flux a = flux(c, field, f, g, displaced(p, axis, s), opt.nu, opt.beta);
      const Flux b = flux(c, field, f, g, displaced(p, axis, -s), opt.nu, opt.beta);
      return (a[axis] - b[axis]) / (2.0 * s);
    };
    div += (4.0 * central(0.5 * h) - central(h)) / 3.0;
  }
  return {lambda * L, div};
}

double divergence_identity_residual(Characteristic c, const AnalyticField& field, const TimeFunction& f,
                                    const TimeFunction& g, const SpacetimePoint& p, const DivergenceOptions& opt) {
  const IdentityValue v = divergence_identity(c, field, f, g, p, opt);
  return std::abs(v.lhs - v.rhs) / std::max(1.0, std::abs(v.lhs));
}

Budget conservation_budget(const DissipationSpec& spec, const RealField& psi, const RealField& zeta, double beta) {
  require_same_grid(psi, zeta, "conservation_budget");
  const Grid& grid = psi.grid();
  const RealField D = dissipation(spec, psi, zeta, beta);
  const double dA = grid.cell_area();
  Budget b;
  double sum_abs = 0.0, psi2 = 0.0, d2 = 0.0, y2 = 0.0;
  for (int j = 0; j < grid.ny(); ++j) {
    const double y = grid.y(j);
    for (int i = 0; i < grid.nx(); ++i) {
      const double dv = D(i, j);
      b.dE -= psi(i, j) * dv;
      b.dZ += (zeta(i, j) + beta * y) * dv;
      b.dGamma += dv;
      b.dM += y * dv;
      sum_abs += std::abs(dv);
      psi2 += psi(i, j) * psi(i, j);
      d2 += dv * dv;
      y2 += y * y;
    }
  }
  b.dE *= dA;
  b.dZ *= dA;
  b.dGamma *= dA;
  b.dM *= dA;
  if (d2 > 0.0) {
    if (psi2 > 0.0) b.rel_dE = b.dE / (std::sqrt(psi2 * d2) * dA);
    b.rel_dGamma = b.dGamma / (sum_abs * dA);
    b.rel_dM = b.dM / (std::sqrt(y2 * d2) * dA);
  }
  return b;
}

RealField budget_test_psi(int n) {
  constexpr double pi = std::numbers::pi;
  const Grid grid(n, n, 2.0 * pi, 2.0 * pi);
  const double sigma = 2.0 * pi / 16.0;
  return RealField::from_function(grid, [&](double x, double y) {
    const double env = std::exp(-0.5 * (y - pi) * (y - pi) / (sigma * sigma));
    return 0.02 * env * (1.0 + std::cos(x) + 0.5 * std::sin(2.0 * x + 0.3) + 0.25 * std::cos(3.0 * x - 1.1));
  });
}

std::vector<BudgetRow> budget_convergence(const DissipationSpec& spec, const std::vector<int>& resolutions,
                                          double beta) {
  std::vector<BudgetRow> rows;
  for (int n : resolutions) {
    const RealField psi = budget_test_psi(n);
    const RealField zeta = laplacian(psi);
    rows.push_back({spec_name(spec), n, conservation_budget(spec, psi, zeta, beta)});
  }
  return rows;
}

double observed_order(double coarse, double fine, double floor) {
  coarse = std::abs(coarse);
  fine = std::abs(fine);
  if (fine <= floor) return std::numeric_limits<double>::infinity();
  return std::log2(coarse / fine);
}

void write_budget_csv(const std::string& path, const std::vector<BudgetRow>& rows) {
  CsvWriter csv(path, {"spec", "N", "dE", "dZ", "dGamma", "dM", "rel_dE", "rel_dGamma", "rel_dM"});
  for (const BudgetRow& r : rows) {
    csv.cell(r.spec).cell(static_cast<long>(r.n));
    csv.cell(r.budget.dE).cell(r.budget.dZ).cell(r.budget.dGamma).cell(r.budget.dM);
    csv.cell(r.budget.rel_dE).cell(r.budget.rel_dGamma).cell(r.budget.rel_dM);
    csv.end_row();
  }
}

std::vector<CertificationRow> certify_divergence_identities(unsigned seed, int fields, int points,
                                                            const DivergenceOptions& opt) {
  std::vector<CertificationRow> rows;
  for (int k = 0; k < fields; ++k) {
    std::mt19937_64 rng(seed + static_cast<unsigned>(k));
    const AnalyticField field = random_trig_field(rng);
    const TimeFunction f = random_polynomial(rng), g = random_polynomial(rng);
    for (int q = 0; q < points; ++q) {
      const SpacetimePoint p = random_point(rng);
      for (Characteristic c : {Characteristic::f, Characteristic::gy, Characteristic::psi})
        rows.push_back({c, seed + static_cast<unsigned>(k), p, divergence_identity_residual(c, field, f, g, p, opt)});
    }
  }
  return rows;
}

void write_certification_csv(const std::string& path, const std::vector<CertificationRow>& rows) {
  CsvWriter csv(path, {"characteristic", "seed", "t", "x", "y", "residual"});
  for (const CertificationRow& r : rows) {
    csv.cell(characteristic_name(r.characteristic)).cell(static_cast<long>(r.seed));
    csv.cell(r.point.t).cell(r.point.x).cell(r.point.y).cell(r.residual);
    csv.end_row();
  }
}

}  // namespace bpv
