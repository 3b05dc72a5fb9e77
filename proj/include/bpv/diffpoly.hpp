#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "bpv/jet.hpp"

namespace bpv {

enum class Direction { t, x, y };

/// Polynomial in the jet coordinates psi_a with real coefficients, closed
/// under total differentiation.
class DiffPoly {
 public:
  using Var = std::uint16_t;
  using Monomial = std::vector<Var>;  // sorted, with repetition

  static DiffPoly constant(double c);
  static DiffPoly variable(const MultiIndex& a);

  DiffPoly total_derivative(Direction d) const;
  DiffPoly times_variable(const MultiIndex& a) const;

  DiffPoly& operator+=(const DiffPoly& o);
  DiffPoly& operator-=(const DiffPoly& o);
  DiffPoly& operator*=(double s);

  double evaluate(const Jet& z) const;
  /// Highest derivative order among the variables (-1 for a constant).
  int order() const;
  std::size_t size() const noexcept { return terms_.size(); }

  static Var encode(const MultiIndex& a);
  static MultiIndex decode(Var v);

 private:
  std::map<Monomial, double> terms_;
};

/// (D_t - psi_y D_x)^k applied to the coordinate psi_seed. Cached.
const DiffPoly& comoving_power(int k, const MultiIndex& seed);

}  // namespace bpv
