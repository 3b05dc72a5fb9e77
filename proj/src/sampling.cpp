#include "bpv/sampling.hpp"

#include <numbers>

namespace bpv {

namespace {

std::vector<TrigTerm> random_terms(std::mt19937_64& rng, int n_terms) {
  std::uniform_real_distribution<double> amp(0.05, 0.3), freq(-1.5, 1.5), phase(0.0, 2.0 * std::numbers::pi);
  std::vector<TrigTerm> terms;
  for (int k = 0; k < n_terms; ++k) terms.push_back({amp(rng), freq(rng), freq(rng), freq(rng), phase(rng)});
  return terms;
}

}  // namespace

AnalyticField random_analytic_field(std::mt19937_64& rng, int n_terms, bool negative_ramp) {
  std::vector<TrigTerm> terms = random_terms(rng, n_terms);
  std::uniform_real_distribution<double> ramp(2.5, 3.5), lin(-1.0, 1.0);
  const double cx = negative_ramp ? -ramp(rng) : ramp(rng);
  const double c0 = lin(rng), ct = lin(rng);
  return AnalyticField(std::move(terms), {c0, ct, cx, lin(rng)});
}

AnalyticField random_trig_field(std::mt19937_64& rng, int n_terms) {
  std::vector<TrigTerm> terms = random_terms(rng, n_terms);
  std::uniform_real_distribution<double> lin(-1.0, 1.0);
  const double c0 = lin(rng), ct = lin(rng), cx = lin(rng);
  return AnalyticField(std::move(terms), {c0, ct, cx, lin(rng)});
}

SpacetimePoint random_point(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  const double t = u(rng), x = u(rng);
  return {t, x, u(rng)};
}

TimeFunction random_polynomial(std::mt19937_64& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_real_distribution<double> c(-1.0, 1.0);
  std::vector<double> coeffs(deg(rng) + 1);
  for (double& v : coeffs) v = c(rng);
  return TimeFunction(coeffs);
}

GroupElement random_group_element(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> e1(-2.0, 2.0), shift(-1.0, 1.0);
  GroupElement g;
  g.eps1 = e1(rng);
  g.eps2 = shift(rng);
  g.eps3 = shift(rng);
  g.f = random_polynomial(rng);
  g.g = random_polynomial(rng);
  return g;
}

}  // namespace bpv
