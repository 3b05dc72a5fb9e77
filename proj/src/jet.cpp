#include "bpv/jet.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "bpv/diffpoly.hpp"

namespace bpv {

std::string MultiIndex::str() const { return std::to_string(t) + std::to_string(x) + std::to_string(y); }

Jet::Jet(int order, SpacetimePoint point)
    : order_(order), point_(point),
      values_(static_cast<std::size_t>(order + 1) * (order + 1) * (order + 1), 0.0) {
  if (order < 0 || order > kMaxJetOrder)
    throw OrderError("jet order " + std::to_string(order) + " outside [0, " + std::to_string(kMaxJetOrder) + "]");
}

double Jet::operator()(int at, int ax, int ay) const {
  if (at < 0 || ax < 0 || ay < 0 || at + ax + ay > order_)
    throw OrderError("jet of order " + std::to_string(order_) + " has no coordinate psi_" +
                     MultiIndex{at, ax, ay}.str());
  return values_[slot(at, ax, ay)];
}

double& Jet::at(int at, int ax, int ay) {
  if (at < 0 || ax < 0 || ay < 0 || at + ax + ay > order_)
    throw OrderError("jet of order " + std::to_string(order_) + " has no coordinate psi_" +
                     MultiIndex{at, ax, ay}.str());
  return values_[slot(at, ax, ay)];
}

bool Jet::all_finite() const noexcept {
  return std::all_of(values_.begin(), values_.end(), [](double v) { return std::isfinite(v); });
}

std::vector<MultiIndex> Jet::indices(int order) {
  std::vector<MultiIndex> out;
  for (int n = 0; n <= order; ++n)
    for (int a = n; a >= 0; --a)
      for (int b = n - a; b >= 0; --b) out.push_back({a, b, n - a - b});
  return out;
}

double AnalyticField::derivative(const MultiIndex& a, const SpacetimePoint& p) const {
  double v = 0.0;
  const int n = a.order();
  for (const TrigTerm& m : terms_) {
    const double theta = m.omega * p.t + m.kappa * p.x + m.lambda * p.y + m.phase;
    double s = 0.0;
    switch (n % 4) {
      case 0: s = std::sin(theta); break;
      case 1: s = std::cos(theta); break;
      case 2: s = -std::sin(theta); break;
      default: s = -std::cos(theta); break;
    }
    v += m.amplitude * std::pow(m.omega, a.t) * std::pow(m.kappa, a.x) * std::pow(m.lambda, a.y) * s;
  }
  if (n == 0) v += affine_[0] + affine_[1] * p.t + affine_[2] * p.x + affine_[3] * p.y;
  if (n == 1) v += a.t == 1 ? affine_[1] : a.x == 1 ? affine_[2] : affine_[3];
  return v;
}

double AnalyticField::max_frequency() const noexcept {
  double m = 0.0;
  for (const TrigTerm& t : terms_) m = std::max({m, std::abs(t.omega), std::abs(t.kappa), std::abs(t.lambda)});
  return m;
}

Jet analytic_jet(const AnalyticField& field, const SpacetimePoint& p, int order) {
  Jet z(order, p);
  const auto idx = Jet::indices(order);
  const int n1 = order + 1;
  std::vector<double> pw(3 * n1);
  for (const TrigTerm& m : field.terms()) {
    const double theta = m.omega * p.t + m.kappa * p.x + m.lambda * p.y + m.phase;
    const double s = std::sin(theta), c = std::cos(theta);
    const double cyc[4] = {s, c, -s, -c};
    pw[0] = pw[n1] = pw[2 * n1] = 1.0;
    for (int k = 1; k < n1; ++k) {
      pw[k] = pw[k - 1] * m.omega;
      pw[n1 + k] = pw[n1 + k - 1] * m.kappa;
      pw[2 * n1 + k] = pw[2 * n1 + k - 1] * m.lambda;
    }
    for (const MultiIndex& a : idx)
      z.at(a) += m.amplitude * pw[a.t] * pw[n1 + a.x] * pw[2 * n1 + a.y] * cyc[a.order() % 4];
  }
  const auto& c = field.affine();
  z.at(0, 0, 0) += c[0] + c[1] * p.t + c[2] * p.x + c[3] * p.y;
  if (order >= 1) {
    z.at(1, 0, 0) += c[1];
    z.at(0, 1, 0) += c[2];
    z.at(0, 0, 1) += c[3];
  }
  return z;
}

TimeFunction::TimeFunction(std::vector<double> coefficients) : coefficients_(std::move(coefficients)) {
  if (degree() > kMaxTimeDegree)
    throw ConfigError("time function degree " + std::to_string(degree()) + " exceeds " +
                      std::to_string(kMaxTimeDegree));
}

double TimeFunction::derivative(int k, double t) const {
  double v = 0.0;
  for (int n = degree(); n >= k; --n) {
    double falling = 1.0;
    for (int m = 0; m < k; ++m) falling *= n - m;
    v = v * t + falling * coefficients_[n];
  }
  return v;
}

SpacetimePoint transform_point(const GroupElement& gel, const SpacetimePoint& p) {
  const double s = std::exp(gel.eps1);
  return {s * (p.t + gel.eps2), (p.x + gel.f(p.t)) / s, (p.y + gel.eps3) / s};
}

FrameParameters evaluate_parameters(const GroupElement& gel, const SpacetimePoint& p, int order) {
  FrameParameters fp;
  fp.eps1 = gel.eps1;
  fp.eps2 = gel.eps2;
  fp.eps3 = gel.eps3;
  for (int k = 0; k <= order + 1; ++k) fp.f.push_back(gel.f.derivative(k, p.t));
  for (int k = 0; k <= order; ++k) fp.h.push_back(gel.g.derivative(k, p.t) - gel.f.derivative(k + 1, p.t) * p.y);
  return fp;
}

namespace {

// Coefficient of a jet coordinate in (D_t - f_t D_x)^k psi_seed: a function of
// t only, stored as its value and derivatives at the jet time.
using TimeJet = std::vector<double>;

double binomial(int n, int k) {
  double b = 1.0;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

}  // namespace

Jet apply_parameters(const FrameParameters& params, const Jet& z) {
  const int r = z.order();
  auto fd = [&](int k) { return k < static_cast<int>(params.f.size()) ? params.f[k] : 0.0; };
  auto hd = [&](int k) {
    if (k >= static_cast<int>(params.h.size()))
      throw OrderError("group parameters lack h_(" + std::to_string(k) + ")");
    return params.h[k];
  };
  if (params.f.empty()) throw OrderError("group parameters lack f_(0)");

  const SpacetimePoint p = z.point();
  const double s = std::exp(params.eps1);
  Jet out(r, {s * (p.t + params.eps2), (p.x + fd(0)) / s, (p.y + params.eps3) / s});

  for (const MultiIndex& a : Jet::indices(r)) {
    const int len = a.t + 1;
    std::map<MultiIndex, TimeJet> combo;
    TimeJet one(len, 0.0);
    one[0] = 1.0;
    combo[{0, a.x, a.y}] = one;
    for (int step = 0; step < a.t; ++step) {
      std::map<MultiIndex, TimeJet> next;
      auto add = [&](const MultiIndex& b, const TimeJet& c) {
        auto [it, inserted] = next.try_emplace(b, TimeJet(len, 0.0));
        for (int m = 0; m < len; ++m) it->second[m] += c[m];
      };
      for (const auto& [b, c] : combo) {
        add({b.t + 1, b.x, b.y}, c);
        TimeJet dc(len, 0.0);
        for (int m = 0; m + 1 < len; ++m) dc[m] = c[m + 1];
        add(b, dc);
        TimeJet prod(len, 0.0);
        for (int m = 0; m < len; ++m)
          for (int j = 0; j <= m; ++j) prod[m] -= binomial(m, j) * fd(j + 1) * c[m - j];
        add({b.t, b.x + 1, b.y}, prod);
      }
      combo = std::move(next);
    }
    double v = 0.0;
    for (const auto& [b, c] : combo) v += c[0] * z(b);
    if (a.x == 0 && a.y == 1) v -= fd(a.t + 1);
    if (a.x == 0 && a.y == 0) v += hd(a.t);
    out.at(a) = std::exp((a.x + a.y - a.t - 3) * params.eps1) * v;
  }
  return out;
}

Jet prolong_action(const GroupElement& gel, const Jet& z) {
  return apply_parameters(evaluate_parameters(gel, z.point(), z.order()), z);
}

FrameParameters moving_frame(const Jet& z) {
  const int r = z.order();
  if (r < 1) throw OrderError("moving frame needs a jet of order >= 1");
  const double psi_x = z(0, 1, 0);
  if (psi_x == 0.0) throw SingularFrameError("moving frame undefined: psi_x = 0");
  FrameParameters fp;
  fp.eps1 = 0.5 * std::log(std::abs(psi_x));
  fp.eps2 = -z.point().t;
  fp.eps3 = -z.point().y;
  fp.f.push_back(-z.point().x);
  for (int k = 0; k + 1 <= r; ++k) fp.f.push_back(comoving_power(k, {0, 0, 1}).evaluate(z));
  for (int k = 0; k <= r; ++k) fp.h.push_back(-comoving_power(k, {0, 0, 0}).evaluate(z));
  return fp;
}

Jet invariantize(const Jet& z) { return apply_parameters(moving_frame(z), z); }

}  // namespace bpv
