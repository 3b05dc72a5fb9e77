// OpenMP kernels against their serial references.
//   build/bench_kernels --benchmark_filter=Arakawa

#include <benchmark/benchmark.h>

#include <cmath>
#include <random>

#include "bpv/dynamics.hpp"
#include "bpv/kernels.hpp"
#include "bpv/spectral.hpp"

using namespace bpv;

namespace {

RealField noise(const Grid& g, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> n;
  RealField f(g);
  for (double& v : f.values()) v = n(rng);
  return f;
}

template <bool Parallel>
void BM_Arakawa(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Grid g(n, n, 1.0, 1.0);
  const RealField a = noise(g, 1), b = noise(g, 2);
  RealField out(g);
  for (auto _ : state) {
    if constexpr (Parallel)
      kernels::arakawa_jacobian(g, a.data(), b.data(), out.data());
    else
      kernels::reference::arakawa_jacobian(g, a.data(), b.data(), out.data());
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * n * n);
}

template <bool Parallel>
void BM_Dot(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Grid g(n, n, 1.0, 1.0);
  const RealField a = noise(g, 1), b = noise(g, 2);
  for (auto _ : state) {
    double d = Parallel ? kernels::dot(g, a.values(), b.values()) : kernels::reference::dot(g, a.values(), b.values());
    benchmark::DoNotOptimize(d);
  }
  state.SetItemsProcessed(state.iterations() * n * n);
}

template <bool Parallel>
void BM_Transform(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Grid g(n, n, 1.0, 1.0);
  const RealField a = noise(g, 1), b = noise(g, 2);
  RealField out(g);
  auto f = [](double x, double y) { return x * std::abs(y) * std::sqrt(std::abs(y)); };
  for (auto _ : state) {
    if constexpr (Parallel)
      kernels::transform(out.values(), f, a.values(), b.values());
    else
      kernels::reference::transform(out.values(), f, a.values(), b.values());
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * n * n);
}

void BM_LeapfrogStep(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Grid g(n, n, 2.56e5, 2.56e5);
  RealField psi = noise(g, 3);
  psi *= 1e3;
  ModelParams p;
  p.dissipation = closure::InvariantHyper{2, 1e-3};
  p.dt = 0.1 * auto_dt(psi);
  SimState s = bootstrap(laplacian(psi), p);
  for (auto _ : state) {
    s = step_leapfrog_raw(s, p);
    benchmark::DoNotOptimize(s.zeta_curr.data());
  }
}

}  // namespace

BENCHMARK(BM_Arakawa<false>)->Name("Arakawa/reference")->Arg(128)->Arg(256)->Arg(512);
BENCHMARK(BM_Arakawa<true>)->Name("Arakawa/openmp")->Arg(128)->Arg(256)->Arg(512);
BENCHMARK(BM_Dot<false>)->Name("Dot/reference")->Arg(256)->Arg(1024);
BENCHMARK(BM_Dot<true>)->Name("Dot/openmp")->Arg(256)->Arg(1024);
BENCHMARK(BM_Transform<false>)->Name("Transform/reference")->Arg(256)->Arg(1024);
BENCHMARK(BM_Transform<true>)->Name("Transform/openmp")->Arg(256)->Arg(1024);
BENCHMARK(BM_LeapfrogStep)->Arg(128)->Arg(256);

BENCHMARK_MAIN();
