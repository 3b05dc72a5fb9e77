#pragma once

#include <random>

#include "bpv/jet.hpp"

namespace bpv {

/// Four-ish trig modes (amplitude 0.05-0.3, frequencies within +-1.5) plus a
/// dominant x-ramp of magnitude 2.5-3.5, so psi_x keeps one sign everywhere.
AnalyticField random_analytic_field(std::mt19937_64& rng, int n_terms = 4, bool negative_ramp = false);

/// Same modes with a small random affine part and no sign guarantee.
AnalyticField random_trig_field(std::mt19937_64& rng, int n_terms = 4);

/// Uniform in [-3, 3]^3.
SpacetimePoint random_point(std::mt19937_64& rng);

/// Degree uniform in 0..max_degree, coefficients uniform in [-1, 1].
TimeFunction random_polynomial(std::mt19937_64& rng, int max_degree = 4);

/// |eps1| <= 2, |eps2|, |eps3| <= 1, f and g random polynomials of degree <= 4.
GroupElement random_group_element(std::mt19937_64& rng);

}  // namespace bpv
