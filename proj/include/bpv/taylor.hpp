#pragma once

#include <vector>

#include "bpv/diffpoly.hpp"
#include "bpv/jet.hpp"

namespace bpv {

/// Truncated Taylor polynomial in (t, x, y) about a point, stored as
/// coefficients c_a = d^a u / a! for |a| <= order. Products truncate to the
/// smaller order, so differential expressions of a jet can be formed
/// exactly to the order the jet supports.
class TaylorJet {
 public:
  TaylorJet(int order, double constant = 0.0);

  /// Taylor polynomial of psi_shift (a derivative of the jet's function)
  /// to order z.order() - |shift|.
  static TaylorJet from_jet(const Jet& z, const MultiIndex& shift = {0, 0, 0});

  int order() const noexcept { return order_; }
  /// d^a u at the expansion point.
  double derivative(const MultiIndex& a) const;
  double value() const { return c_[0]; }

  TaylorJet diff(Direction d) const;

  TaylorJet& operator+=(const TaylorJet& o);
  TaylorJet& operator-=(const TaylorJet& o);
  TaylorJet& operator*=(double s);
  friend TaylorJet operator+(TaylorJet a, const TaylorJet& b) { return a += b; }
  friend TaylorJet operator-(TaylorJet a, const TaylorJet& b) { return a -= b; }
  friend TaylorJet operator*(TaylorJet a, double s) { return a *= s; }
  friend TaylorJet operator*(double s, TaylorJet a) { return a *= s; }
  friend TaylorJet operator*(const TaylorJet& a, const TaylorJet& b);

 private:
  std::size_t slot(int a, int b, int c) const noexcept {
    return (static_cast<std::size_t>(a) * (order_ + 1) + b) * (order_ + 1) + c;
  }
  double coeff(int a, int b, int c) const noexcept { return c_[slot(a, b, c)]; }
  TaylorJet truncated(int order) const;

  int order_;
  std::vector<double> c_;
};

/// Laplacian in (x, y).
TaylorJet laplacian(const TaylorJet& u);

}  // namespace bpv
