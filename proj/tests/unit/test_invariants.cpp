#include <gtest/gtest.h>

#include <random>

#include "bpv/invariants.hpp"
#include "random_fields.hpp"

using namespace bpv;

TEST(NormalizedInvariant, DirectFormula) {
  Jet z(2, {});
  z.at(0, 1, 0) = 4.0;
  z.at(0, 2, 0) = 2.0;
  EXPECT_DOUBLE_EQ(normalized_invariant(z, {0, 2, 0}), 1.0);
}

TEST(NormalizedInvariant, GeneratorsMatchClosedForms) {
  std::mt19937_64 rng(1);
  Jet z = analytic_jet(fixtures::random_analytic_field(rng, 4, true), fixtures::random_point(rng), 2);
  const double s = std::sqrt(std::abs(z(0, 1, 0)));
  EXPECT_NEAR(normalized_invariant(z, {1, 1, 0}), (z(1, 1, 0) - z(0, 0, 1) * z(0, 2, 0)) / (s * s * s), 1e-13);
  EXPECT_NEAR(normalized_invariant(z, {0, 1, 1}), z(0, 1, 1) / s, 1e-13);
  EXPECT_NEAR(normalized_invariant(z, {0, 0, 2}), z(0, 0, 2) / s, 1e-13);
}

TEST(NormalizedInvariant, VanishOnLinearField) {
  AnalyticField f({}, {0, 0, 1, 0});
  Jet z = analytic_jet(f, {0.3, 0.2, 0.1}, 4);
  for (const MultiIndex& a : invariant_indices(4)) EXPECT_EQ(normalized_invariant(z, a), 0.0) << a.str();
}

TEST(NormalizedInvariant, Errors) {
  Jet z(3, {});
  z.at(0, 1, 0) = 1.0;
  EXPECT_THROW(normalized_invariant(z, {2, 0, 0}), PhantomIndexError);
  EXPECT_THROW(normalized_invariant(z, {1, 0, 1}), PhantomIndexError);
  EXPECT_THROW(normalized_invariant(z, {0, 1, 0}), PhantomIndexError);
  EXPECT_THROW(normalized_invariant(z, {0, 4, 0}), OrderError);
  Jet zero(3, {});
  EXPECT_THROW(normalized_invariant(zero, {0, 2, 0}), SingularFrameError);
}

TEST(NormalizedInvariant, IndexSetExcludesPhantoms) {
  auto idx = invariant_indices(2);
  // Order 2: 10 indices minus (0,0,0),(1,0,0),(0,0,1),(2,0,0),(1,0,1),(0,1,0).
  EXPECT_EQ(idx.size(), 4u);
}

TEST(NormalizedInvariant, InvariantUnderRandomGroupElements) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 40; ++trial) {
    Jet z = analytic_jet(fixtures::random_analytic_field(rng, 4, trial % 2), fixtures::random_point(rng), 4);
    Jet w = prolong_action(fixtures::random_group_element(rng), z);
    for (const MultiIndex& a : invariant_indices(4)) {
      const double i0 = normalized_invariant(z, a);
      EXPECT_NEAR(normalized_invariant(w, a), i0, 1e-9 * (1 + std::abs(i0))) << a.str();
    }
  }
}

TEST(InvariantDerivative, ConstantExpressionVanishes) {
  std::mt19937_64 rng(3);
  AnalyticField f = fixtures::random_analytic_field(rng);
  const SpacetimePoint p = fixtures::random_point(rng);
  for (Direction d : {Direction::t, Direction::x, Direction::y})
    EXPECT_NEAR(invariant_derivative(f, constant_expr(2.5), d, p), 0.0, 1e-12);
}

TEST(InvariantDerivative, SplitRelationForDxI020) {
  // psi = x + small smooth perturbation
  AnalyticField f({{0.1, 0.3, 0.7, -0.4, 0.2}, {0.05, -0.2, 1.1, 0.9, 1.0}}, {0, 0, 1, 0});
  const SpacetimePoint p{0.2, 0.4, -0.3};
  const double lhs = invariant_derivative(f, invariant_expr({0, 2, 0}), Direction::x, p);
  const Jet z = analytic_jet(f, p, 3);
  const double i020 = normalized_invariant(z, {0, 2, 0});
  EXPECT_NEAR(lhs, normalized_invariant(z, {0, 3, 0}) - 0.5 * i020 * i020, 1e-7);
}

TEST(InvariantDerivative, Linearity) {
  std::mt19937_64 rng(4);
  AnalyticField f = fixtures::random_analytic_field(rng);
  const SpacetimePoint p = fixtures::random_point(rng);
  const InvExpr F = invariant_expr({0, 2, 0}), G = invariant_expr({1, 1, 0});
  for (Direction d : {Direction::t, Direction::x, Direction::y}) {
    const double combo = invariant_derivative(f, 2.0 * F - 3.0 * G, d, p);
    const double split = 2.0 * invariant_derivative(f, F, d, p) - 3.0 * invariant_derivative(f, G, d, p);
    EXPECT_NEAR(combo, split, 1e-9);
  }
}

TEST(InvariantDerivative, StencilCrossingRejected) {
  // psi = sin x: psi_x = cos x vanishes at pi/2; a coarse step straddles it.
  AnalyticField f({{1.0, 0.0, 1.0, 0.0, 0.0}});
  FdOptions opt{0.1};
  EXPECT_THROW(invariant_derivative(f, invariant_expr({0, 2, 0}), Direction::x, {0, M_PI / 2 - 0.01, 0}, opt),
               StencilCrossingError);
  EXPECT_NO_THROW(invariant_derivative(f, invariant_expr({0, 2, 0}), Direction::x, {0, 0.3, 0}, opt));
}

class IdentityTest : public ::testing::TestWithParam<std::string> {};

TEST_P(IdentityTest, HoldsOnRandomFieldsOfBothSigns) {
  const std::string id = GetParam();
  std::mt19937_64 rng(std::hash<std::string>{}(id));
  int checked = 0;
  for (int trial = 0; trial < 60 && checked < 6; ++trial) {
    AnalyticField f = fixtures::random_analytic_field(rng, 4, trial % 2);
    const SpacetimePoint p = fixtures::random_point(rng);
    try {
      EXPECT_LE(check_syzygy(id, f, p), 1e-6) << id << " trial " << trial;
      ++checked;
    } catch (const DomainError&) {
    }
  }
  EXPECT_GE(checked, 6);
}

INSTANTIATE_TEST_SUITE_P(All, IdentityTest, ::testing::ValuesIn(identity_ids()),
                         [](const auto& info) {
                           std::string s = info.param;
                           for (char& c : s)
                             if (c == '.') c = '_';
                           return s;
                         });

TEST(Identities, LinearFieldBothSidesZero) {
  AnalyticField f({}, {0, 0, 1, 0});
  for (const std::string& id : {"syzygy.4", "syzygy.1", "commutator.xy"}) {
    IdentityValue v = evaluate_identity(id, f, {0, 0, 0});
    EXPECT_NEAR(v.lhs, 0.0, 1e-12);
    EXPECT_NEAR(v.rhs, 0.0, 1e-12);
  }
}

TEST(Identities, GeneratorDomainError) {
  AnalyticField f({}, {0, 0, 1, 0});
  EXPECT_THROW(evaluate_identity("generator.I011", f, {0, 0, 0}), DomainError);
  EXPECT_THROW(evaluate_identity("nonexistent", f, {0, 0, 0}), ConfigError);
}

TEST(VorticityResidual, RossbyWave) {
  const double beta = 1.3, kappa = 0.8, lambda = -0.5;
  const double omega = -beta * kappa / (kappa * kappa + lambda * lambda);
  // A sin(kappa x + lambda y - omega t) plus a uniform ramp to keep psi_x != 0
  // is still exact: the ramp cx x carries zero vorticity but advects zeta.
  AnalyticField f({{0.3, -omega, kappa, lambda, 0.1}});
  std::mt19937_64 rng(5);
  for (int k = 0; k < 10; ++k) {
    Jet z = analytic_jet(f, fixtures::random_point(rng), 3);
    if (std::abs(z(0, 1, 0)) < 1e-3) continue;
    EXPECT_NEAR(invariant_representation_residual(z, beta), 0.0, 1e-10);
  }
}

TEST(VorticityResidual, ForcedJetAndProportionality) {
  std::mt19937_64 rng(6);
  for (int k = 0; k < 20; ++k) {
    Jet z = analytic_jet(fixtures::random_analytic_field(rng, 4, k % 2), fixtures::random_point(rng), 3);
    const double beta = 0.7;
    EXPECT_NEAR(invariant_representation_residual(z, beta) * z(0, 1, 0), raw_vorticity_residual(z, beta),
                1e-12 * (1 + std::abs(raw_vorticity_residual(z, beta))));
    // force zeta_t so that the equation holds
    const double zx = z(0, 3, 0) + z(0, 1, 2), zy = z(0, 2, 1) + z(0, 0, 3);
    z.at(1, 2, 0) = -z(0, 1, 0) * zy + z(0, 0, 1) * zx - beta * z(0, 1, 0) - z(1, 0, 2);
    EXPECT_NEAR(invariant_representation_residual(z, beta), 0.0, 1e-12);
  }
  Jet low(2, {});
  EXPECT_THROW(invariant_representation_residual(low, 1.0), OrderError);
  Jet flat(3, {});
  EXPECT_THROW(invariant_representation_residual(flat, 1.0), SingularFrameError);
}

TEST(GeneratorJacobian, DeterminantMatchesClosedForm) {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 20; ++k) {
    Jet z = analytic_jet(fixtures::random_analytic_field(rng, 4, k % 2), fixtures::random_point(rng), 2);
    IndependenceReport r = generator_jacobian(z);
    const double expected = 1.0 / std::pow(std::abs(z(0, 1, 0)), 3);
    EXPECT_NEAR(r.determinant, expected, 1e-6 * expected);
    EXPECT_GT(std::abs(r.determinant), 0.0);
    EXPECT_GE(r.condition_number, 1.0);
    EXPECT_TRUE(std::isfinite(r.condition_number));
  }
}
