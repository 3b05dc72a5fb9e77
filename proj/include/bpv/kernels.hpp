#pragma once

// Data-parallel grid kernels.
//
// Every kernel exists twice: the OpenMP version in bpv::kernels (used by the
// library) and a plain serial loop in bpv::kernels::reference (kept for the
// equivalence tests and the benchmark). Pointwise kernels write disjoint
// outputs, so both versions are bit-identical for any thread count.
// Reductions accumulate one partial per grid row and add the partials in row
// order, which also makes them independent of the thread count.

#include <cstddef>
#include <span>
#include <vector>

#include "bpv/grid.hpp"

namespace bpv::kernels {

/// Nine-point Arakawa stencil at one point, before division by 12*dx*dy.
/// `a(di, dj)` and `b(di, dj)` return neighbour values.
template <class A, class B>
inline double arakawa_stencil_sum(A&& a, B&& b) {
  const double aE = a(1, 0), aW = a(-1, 0), aN = a(0, 1), aS = a(0, -1);
  const double aNE = a(1, 1), aNW = a(-1, 1), aSE = a(1, -1), aSW = a(-1, -1);
  const double bE = b(1, 0), bW = b(-1, 0), bN = b(0, 1), bS = b(0, -1);
  const double bNE = b(1, 1), bNW = b(-1, 1), bSE = b(1, -1), bSW = b(-1, -1);
  const double jpp = (aE - aW) * (bN - bS) - (aN - aS) * (bE - bW);
  const double jpx = aE * (bNE - bSE) - aW * (bNW - bSW) - aN * (bNE - bNW) + aS * (bSE - bSW);
  const double jxp = aNE * (bN - bE) - aSW * (bW - bS) - aNW * (bN - bW) + aSE * (bE - bS);
  return jpp + jpx + jxp;
}

/// out = J(a, b) with the energy- and enstrophy-conserving Arakawa form.
void arakawa_jacobian(const Grid& g, const double* a, const double* b, double* out);

void axpy(double alpha, std::span<const double> x, std::span<double> y);
void scale(double s, std::span<double> y);
double sum(const Grid& g, std::span<const double> v);
double dot(const Grid& g, std::span<const double> a, std::span<const double> b);

/// out[k] = f(in0[k], in1[k], ...) for every grid point.
template <class F, class... In>
void transform(std::span<double> out, F&& f, const In&... in) {
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(out.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t k = 0; k < n; ++k) out[k] = f(in[k]...);
}

namespace reference {

void arakawa_jacobian(const Grid& g, const double* a, const double* b, double* out);
double sum(const Grid& g, std::span<const double> v);
double dot(const Grid& g, std::span<const double> a, std::span<const double> b);

template <class F, class... In>
void transform(std::span<double> out, F&& f, const In&... in) {
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = f(in[k]...);
}

}  // namespace reference

/// Number of threads OpenMP would use (1 without OpenMP).
int max_threads();
/// RAII override of the OpenMP thread count.
class ThreadCountScope {
 public:
  explicit ThreadCountScope(int n);
  ~ThreadCountScope();
  ThreadCountScope(const ThreadCountScope&) = delete;
  ThreadCountScope& operator=(const ThreadCountScope&) = delete;

 private:
  int previous_;
};

}  // namespace bpv::kernels
