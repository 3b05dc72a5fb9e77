#pragma once

#include <cmath>
#include <random>

#include "bpv/grid.hpp"
#include "bpv/jet.hpp"
#include "bpv/sampling.hpp"

namespace bpv::fixtures {

using bpv::random_analytic_field;
using bpv::random_group_element;
using bpv::random_point;
using bpv::random_polynomial;

// Random field with Fourier content up to |k| <= kmax per axis, no Nyquist.
inline RealField band_limited_noise(const Grid& g, std::uint64_t seed, int kmax) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> n(0.0, 1.0);
  RealField f(g);
  for (int kx = 0; kx <= kmax; ++kx)
    for (int ky = -kmax; ky <= kmax; ++ky) {
      const double a = n(rng), b = n(rng);
      for (int j = 0; j < g.ny(); ++j)
        for (int i = 0; i < g.nx(); ++i) {
          const double th = 2 * M_PI * (kx * g.x(i) / g.lx() + ky * g.y(j) / g.ly());
          f(i, j) += a * std::cos(th) + b * std::sin(th);
        }
    }
  return f;
}

}  // namespace bpv::fixtures
