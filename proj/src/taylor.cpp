#include "bpv/taylor.hpp"

#include <algorithm>

namespace bpv {

namespace {

double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace

TaylorJet::TaylorJet(int order, double constant)
    : order_(order), c_(static_cast<std::size_t>(order + 1) * (order + 1) * (order + 1), 0.0) {
  if (order < 0) throw OrderError("Taylor order must be non-negative");
  c_[0] = constant;
}

TaylorJet TaylorJet::from_jet(const Jet& z, const MultiIndex& shift) {
  const int r = z.order() - shift.order();
  if (r < 0) throw OrderError("jet of order " + std::to_string(z.order()) + " cannot shift by " + shift.str());
  TaylorJet u(r);
  for (const MultiIndex& a : Jet::indices(r))
    u.c_[u.slot(a.t, a.x, a.y)] =
        z(a.t + shift.t, a.x + shift.x, a.y + shift.y) / (factorial(a.t) * factorial(a.x) * factorial(a.y));
  return u;
}

double TaylorJet::derivative(const MultiIndex& a) const {
  if (a.t < 0 || a.x < 0 || a.y < 0 || a.order() > order_)
    throw OrderError("Taylor jet of order " + std::to_string(order_) + " has no derivative " + a.str());
  return coeff(a.t, a.x, a.y) * factorial(a.t) * factorial(a.x) * factorial(a.y);
}

TaylorJet TaylorJet::diff(Direction d) const {
  if (order_ == 0) throw OrderError("cannot differentiate a Taylor jet of order 0");
  TaylorJet out(order_ - 1);
  for (const MultiIndex& a : Jet::indices(order_ - 1)) {
    MultiIndex b = a;
    int& k = d == Direction::t ? b.t : d == Direction::x ? b.x : b.y;
    ++k;
    out.c_[out.slot(a.t, a.x, a.y)] = k * coeff(b.t, b.x, b.y);
  }
  return out;
}

TaylorJet TaylorJet::truncated(int order) const {
  if (order == order_) return *this;
  TaylorJet out(order);
  for (const MultiIndex& a : Jet::indices(order)) out.c_[out.slot(a.t, a.x, a.y)] = coeff(a.t, a.x, a.y);
  return out;
}

TaylorJet& TaylorJet::operator+=(const TaylorJet& o) {
  if (o.order_ < order_) *this = truncated(o.order_);
  for (const MultiIndex& a : Jet::indices(order_)) c_[slot(a.t, a.x, a.y)] += o.coeff(a.t, a.x, a.y);
  return *this;
}

TaylorJet& TaylorJet::operator-=(const TaylorJet& o) {
  if (o.order_ < order_) *this = truncated(o.order_);
  for (const MultiIndex& a : Jet::indices(order_)) c_[slot(a.t, a.x, a.y)] -= o.coeff(a.t, a.x, a.y);
  return *this;
}

TaylorJet& TaylorJet::operator*=(double s) {
  for (double& v : c_) v *= s;
  return *this;
}

TaylorJet operator*(const TaylorJet& a, const TaylorJet& b) {
  const int r = std::min(a.order_, b.order_);
  TaylorJet out(r);
  const auto idx = Jet::indices(r);
  for (const MultiIndex& p : idx) {
    const double ap = a.coeff(p.t, p.x, p.y);
    if (ap == 0.0) continue;
    for (const MultiIndex& q : idx) {
      if (p.order() + q.order() > r) break;  // indices are graded by order
      out.c_[out.slot(p.t + q.t, p.x + q.x, p.y + q.y)] += ap * b.coeff(q.t, q.x, q.y);
    }
  }
  return out;
}

TaylorJet laplacian(const TaylorJet& u) {
  return u.diff(Direction::x).diff(Direction::x) + u.diff(Direction::y).diff(Direction::y);
}

}  // namespace bpv
