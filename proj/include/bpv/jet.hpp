#pragma once

#include <array>
#include <string>
#include <vector>

#include "bpv/errors.hpp"

namespace bpv {

/// Highest derivative order a jet may carry.
inline constexpr int kMaxJetOrder = 8;

/// Multi-index (a_t, a_x, a_y) of the derivative d^|a| psi / dt^a_t dx^a_x dy^a_y.
struct MultiIndex {
  int t = 0;
  int x = 0;
  int y = 0;
  constexpr int order() const noexcept { return t + x + y; }
  friend constexpr bool operator==(const MultiIndex&, const MultiIndex&) = default;
  friend constexpr auto operator<=>(const MultiIndex&, const MultiIndex&) = default;
  std::string str() const;
};

struct SpacetimePoint {
  double t = 0.0;
  double x = 0.0;
  double y = 0.0;
};

/// Values of psi and all its partial derivatives of order <= r at one point.
class Jet {
 public:
  Jet(int order, SpacetimePoint point);

  int order() const noexcept { return order_; }
  const SpacetimePoint& point() const noexcept { return point_; }
  void set_point(SpacetimePoint p) noexcept { point_ = p; }

  double operator()(int at, int ax, int ay) const;
  double operator()(const MultiIndex& a) const { return (*this)(a.t, a.x, a.y); }
  double& at(int at, int ax, int ay);
  double& at(const MultiIndex& a) { return at(a.t, a.x, a.y); }

  bool all_finite() const noexcept;

  /// All multi-indices with |a| <= order, graded by order.
  static std::vector<MultiIndex> indices(int order);

 private:
  std::size_t slot(int at, int ax, int ay) const noexcept {
    return (static_cast<std::size_t>(at) * (order_ + 1) + ax) * (order_ + 1) + ay;
  }
  int order_;
  SpacetimePoint point_;
  std::vector<double> values_;
};

/// One space-time mode A sin(omega t + kappa x + lambda y + phase).
struct TrigTerm {
  double amplitude = 0.0;
  double omega = 0.0;
  double kappa = 0.0;
  double lambda = 0.0;
  double phase = 0.0;
};

/// Finite sum of trigonometric modes plus an affine part
/// c0 + ct t + cx x + cy y; every derivative is available in closed form.
class AnalyticField {
 public:
  AnalyticField() = default;
  explicit AnalyticField(std::vector<TrigTerm> terms, std::array<double, 4> affine = {0, 0, 0, 0})
      : terms_(std::move(terms)), affine_(affine) {}

  const std::vector<TrigTerm>& terms() const noexcept { return terms_; }
  /// {c0, ct, cx, cy}
  const std::array<double, 4>& affine() const noexcept { return affine_; }

  double derivative(const MultiIndex& a, const SpacetimePoint& p) const;
  double value(const SpacetimePoint& p) const { return derivative({0, 0, 0}, p); }
  /// Largest |omega|, |kappa|, |lambda| over the modes (0 for none).
  double max_frequency() const noexcept;

 private:
  std::vector<TrigTerm> terms_;
  std::array<double, 4> affine_{0, 0, 0, 0};
};

Jet analytic_jet(const AnalyticField& field, const SpacetimePoint& p, int order);

/// Polynomial c0 + c1 t + ... + cd t^d, d <= kMaxTimeDegree.
class TimeFunction {
 public:
  static constexpr int kMaxTimeDegree = 6;

  TimeFunction() = default;
  explicit TimeFunction(std::vector<double> coefficients);

  static TimeFunction zero() { return TimeFunction(); }
  static TimeFunction constant(double c) { return TimeFunction({c}); }
  static TimeFunction linear(double c0, double c1) { return TimeFunction({c0, c1}); }

  int degree() const noexcept { return coefficients_.empty() ? -1 : static_cast<int>(coefficients_.size()) - 1; }
  const std::vector<double>& coefficients() const noexcept { return coefficients_; }
  double operator()(double t) const { return derivative(0, t); }
  /// Exact k-th derivative; 0 for k > degree.
  double derivative(int k, double t) const;

 private:
  std::vector<double> coefficients_;
};

/// Element of the pseudogroup G1, composed as scaling o time shift o
/// y-shift o generalized boost o gauge:
///   T = e^{eps1}(t + eps2), X = e^{-eps1}(x + f(t)), Y = e^{-eps1}(y + eps3),
///   Psi = e^{-3 eps1}(psi + g(t) - f'(t) y).
struct GroupElement {
  double eps1 = 0.0;
  double eps2 = 0.0;
  double eps3 = 0.0;
  TimeFunction f;
  TimeFunction g;

  static GroupElement identity() { return {}; }
  static GroupElement scaling(double e) { return {e, 0.0, 0.0, {}, {}}; }
};

/// Group parameters evaluated at one jet point: scalars plus the values of
/// f_(k) = d^k f/dt^k and h_(k) = d^k h/dt^k, h = g(t) - f'(t) y.
struct FrameParameters {
  double eps1 = 0.0;
  double eps2 = 0.0;
  double eps3 = 0.0;
  std::vector<double> f;  ///< f_(0), f_(1), ...
  std::vector<double> h;  ///< h_(0), h_(1), ...
};

SpacetimePoint transform_point(const GroupElement& gel, const SpacetimePoint& p);

/// Parameters of `gel` at the point of a jet of order r.
FrameParameters evaluate_parameters(const GroupElement& gel, const SpacetimePoint& p, int order);

/// Prolonged action on a jet; the result is the jet of the transformed
/// function at the transformed point, with the same order.
Jet prolong_action(const GroupElement& gel, const Jet& z);
/// Same action with the group parameters given pointwise.
Jet apply_parameters(const FrameParameters& params, const Jet& z);

/// Moving frame defined by T = X = Y = 0, Psi_k00 = Psi_k01 = 0,
/// Psi_010 = sgn psi_x. Throws SingularFrameError when psi_x = 0.
FrameParameters moving_frame(const Jet& z);

/// Invariantization iota(z): the frame applied to its own jet.
Jet invariantize(const Jet& z);

}  // namespace bpv
