#include <gtest/gtest.h>

#include <cmath>

#include "bpv/grid.hpp"

using namespace bpv;

TEST(Grid, RejectsOddOrTinySizes) {
  EXPECT_THROW(Grid(5, 8, 1.0, 1.0), ConfigError);
  EXPECT_THROW(Grid(2, 8, 1.0, 1.0), ConfigError);
  EXPECT_THROW(Grid(8, 8, 0.0, 1.0), ConfigError);
  EXPECT_NO_THROW(Grid(4, 6, 1.0, 2.0));
}

TEST(Grid, SpacingAndIndexing) {
  Grid g(8, 4, 2.0, 1.0);
  EXPECT_DOUBLE_EQ(g.dx(), 0.25);
  EXPECT_DOUBLE_EQ(g.dy(), 0.25);
  EXPECT_DOUBLE_EQ(g.cell_area(), 0.0625);
  EXPECT_EQ(g.index(3, 2), 19u);
  EXPECT_EQ(g.size(), 32u);
}

TEST(RealField, ArithmeticAndReductions) {
  Grid g(4, 4, 1.0, 1.0);
  RealField a = RealField::from_function(g, [](double x, double y) { return x + 2 * y; });
  RealField b(g, 1.0);
  RealField c = 2.0 * a + b;
  EXPECT_DOUBLE_EQ(c(1, 1), 2.0 * (0.25 + 0.5) + 1.0);
  EXPECT_NEAR(b.mean(), 1.0, 1e-15);
  EXPECT_DOUBLE_EQ(b.l2(), 4.0);
  c.subtract_mean();
  EXPECT_NEAR(c.mean(), 0.0, 1e-15);
  EXPECT_TRUE(c.all_finite());
  c(0, 0) = std::nan("");
  EXPECT_FALSE(c.all_finite());
}

TEST(RealField, MismatchedGridsThrow) {
  RealField a(Grid(4, 4, 1.0, 1.0)), b(Grid(8, 4, 1.0, 1.0));
  EXPECT_THROW(a += b, ShapeError);
  EXPECT_THROW(relative_l2(a, b), ShapeError);
}
