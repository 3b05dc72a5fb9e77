#include <gtest/gtest.h>

#include <cmath>

#include "bpv/diagnostics.hpp"
#include "bpv/initial_condition.hpp"
#include "bpv/spectral.hpp"

using namespace bpv;

namespace {

RunConfig small(std::uint64_t seed = 3) {
  RunConfig c;
  c.grid = {64, 64, 2.56e5, 2.56e5};
  c.seed = seed;
  c.ic.k0 = 16;
  return c;
}

double total(const SpectrumResult& s) {
  double t = 0;
  for (double e : s.E) t += e;
  return t;
}

// Per shell m of the full spectrum (zero and Nyquist modes excluded): mode
// count and mean of the target shape over those modes, which is the expected
// shell energy up to normalization.
struct ShellTarget {
  std::vector<int> count;
  std::vector<double> mean_shape;
};

ShellTarget shell_targets(int n, const InitialConditionConfig& ic) {
  ShellTarget t{std::vector<int>(n, 0), std::vector<double>(n, 0.0)};
  for (int kx = -n / 2 + 1; kx < n / 2; ++kx)
    for (int ky = -n / 2 + 1; ky < n / 2; ++ky) {
      if (kx == 0 && ky == 0) continue;
      const double k = std::hypot(kx, ky);
      const int m = static_cast<int>(std::floor(k + 0.5));
      t.count[m]++;
      t.mean_shape[m] += ic_spectrum_shape(k, ic);
    }
  for (int m = 0; m < n; ++m)
    if (t.count[m]) t.mean_shape[m] /= t.count[m];
  return t;
}

}  // namespace

TEST(InitialCondition, Deterministic) {
  const RealField a = generate_initial_condition(small()), b = generate_initial_condition(small());
  EXPECT_TRUE(std::equal(a.values().begin(), a.values().end(), b.values().begin()));
  const RealField c = generate_initial_condition(small(4));
  EXPECT_GT(relative_l2(a, c), 0.1);
}

TEST(InitialCondition, AmplitudeSetsEnergy) {
  RunConfig c = small();
  const RealField a = generate_initial_condition(c);
  EXPECT_NEAR(total(energy_spectrum(a)), 50.0, 1e-10 * 50.0);
  c.ic.amplitude = 100.0;
  const RealField b = generate_initial_condition(c);
  EXPECT_NEAR(total(energy_spectrum(b)) / total(energy_spectrum(a)), 2.0, 1e-10);
  EXPECT_LT(std::abs(a.mean()), 1e-12 * a.max_abs());
}

TEST(InitialCondition, SpectrumFollowsShape) {
  RunConfig c;  // defaults, N = 128
  const SpectrumResult s = energy_spectrum(generate_initial_condition(c));
  const ShellTarget t = shell_targets(c.grid.nx, c.ic);
  std::vector<double> dev;
  for (std::size_t i = 0; i < s.k.size(); ++i) {
    const int m = s.k[i];
    if (m >= c.grid.nx || t.count[m] < 8) continue;
    dev.push_back(std::log10(s.E[i] / t.mean_shape[m]));
  }
  ASSERT_GT(dev.size(), 10u);
  double mean = 0;
  for (double d : dev) mean += d;
  mean /= dev.size();
  double rms = 0;
  for (double d : dev) rms += (d - mean) * (d - mean);
  rms = std::sqrt(rms / dev.size());
  EXPECT_LE(rms, 0.1);
}

TEST(InitialCondition, LowWavenumberSlope) {
  // Local slope of k^6/(1 + k/32)^18 is 6 - 18 (k/32)/(1 + k/32): 4.9 at k = 2, 2.4 at k = 8.
  RunConfig c;
  auto fit_shape = [](const InitialConditionConfig& ic) {
    SpectrumResult shape;
    for (int m = 1; m <= 60; ++m) {
      shape.k.push_back(m);
      shape.E.push_back(ic_spectrum_shape(m, ic));
    }
    return fit_slope(shape, 2, 8);
  };
  const double expected = fit_shape(c.ic);
  EXPECT_GT(expected, 2.4);
  EXPECT_LT(expected, 4.9);
  InitialConditionConfig wide = c.ic;
  wide.k0 = 1e7;
  EXPECT_NEAR(fit_shape(wide), 6.0, 1e-3);
  EXPECT_NEAR(fit_slope(energy_spectrum(generate_initial_condition(c)), 2, 8), expected, 0.6);
}

TEST(InitialCondition, NoNyquistContent) {
  const RealField psi = generate_initial_condition(small());
  const SpectralField P = dft2(psi);
  double nyq = 0, all = 0;
  for (int jy = 0; jy < P.ny(); ++jy)
    for (int kx = 0; kx < P.nkx(); ++kx) {
      const double a = std::abs(P.at(kx, jy));
      all = std::max(all, a);
      if (P.is_nyquist_x(kx) || P.is_nyquist_y(jy)) nyq = std::max(nyq, a);
    }
  EXPECT_LT(nyq, 1e-12 * all);
}

TEST(InitialCondition, WarnsOnFlatTail) {
  RunConfig c = small();
  c.ic.q = 7.5;
  std::vector<std::string> warnings;
  generate_initial_condition(c, &warnings);
  ASSERT_EQ(warnings.size(), 1u);
  EXPECT_NE(warnings[0].find("ic.q"), std::string::npos);
  warnings.clear();
  generate_initial_condition(small(), &warnings);
  EXPECT_TRUE(warnings.empty());
}
