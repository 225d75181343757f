#include <gtest/gtest.h>

#include "oracles.hpp"
#include "sidon/density_bounds.hpp"

using namespace sidon;

TEST(Density, Examples) {
  EXPECT_EQ(density(shape_points(ShapeSpec::simplex(2, 1)), hnf(IntMatrix{{2, 0}, {0, 2}})), Rational(3, 4));
  EXPECT_EQ(density(shape_points(ShapeSpec::diff(2, 1, 1)), hnf(IntMatrix{{7, 0}, {4, 1}})), Rational(1));
  EXPECT_EQ(density(shape_points(ShapeSpec::simplex(2, 2)), hnf(IntMatrix{{7, 0}, {4, 1}})), Rational(6, 7));
}

TEST(Density, DiscreteRatio) {
  EXPECT_EQ(discrete_density_ratio(DensityKind::Packing, 4, 2, 19), Rational(15, 19));
  EXPECT_EQ(discrete_density_ratio(DensityKind::Packing, 2, 1, 3), Rational(1));
  EXPECT_EQ(discrete_density_ratio(DensityKind::Covering, 2, 2, 5), Rational(6, 5));
  EXPECT_THROW(discrete_density_ratio(DensityKind::Packing, 2, 2, 0), Error);
}

TEST(Density, Constants) {
  EXPECT_EQ(*simplex_packing_density(2), Rational(2, 3));
  EXPECT_EQ(*simplex_packing_density(3), Rational(18, 49));
  EXPECT_FALSE(simplex_packing_density(4));
  EXPECT_EQ(*simplex_covering_density(2), Rational(3, 2));
  EXPECT_EQ(simplex_density_lower_bound(4, 2), Rational(12));
  EXPECT_THROW(simplex_density_lower_bound(4, 4), Error);
}

TEST(Bounds, TenThree) {
  BoundsTable t = bounds_report(10, 3);
  // (2n)!/(2^n (n!)^3) (h-2n+2)^n = 720/1728 * 216
  EXPECT_EQ(*t.find("phi_lower_classical")->value, Rational(720 * 216, 8 * 216));
  EXPECT_EQ(t.find("phi_lower_classical")->value->ceil(), 90);
  EXPECT_EQ(t.find("phi_lower_density")->value->ceil(), 454);
  EXPECT_EQ(*t.find("phi_upper_trivial")->value, Rational(1331));
  EXPECT_EQ(*t.find("phi_lower_pigeonhole")->value, Rational(oracle::binomial(13, 3)));
  EXPECT_EQ(*t.find("phi_limit")->value, Rational(49, 108));
}

TEST(Bounds, LimitConstants) {
  EXPECT_EQ(*bounds_report(7, 1).find("phi_limit")->value, Rational(1));
  EXPECT_EQ(*bounds_report(7, 2).find("phi_limit")->value, Rational(3, 4));
  EXPECT_EQ(bounds_report(9, 1).find("phi_lower_density")->value->ceil(), 9);
  BoundsTable t = bounds_report(4, 2);
  EXPECT_EQ(t.find("phi_lower_density")->value->ceil(), 12);
  EXPECT_LE(t.find("phi_lower_density")->value->ceil(), 19);
}

TEST(Bounds, SymbolicEntriesCarryNoNumber) {
  BoundsTable t = bounds_report(5, 6);
  for (const char* id : {"simplex_packing_density_large_n", "phi_limit_large_n", "simplex_covering_density_upper"}) {
    const BoundEntry* e = t.find(id);
    ASSERT_NE(e, nullptr) << id;
    EXPECT_FALSE(e->value.has_value());
    EXPECT_FALSE(e->numeric);
  }
  EXPECT_FALSE(t.find("phi_lower_density")->applicable);
  EXPECT_TRUE(t.find("phi_limit_lower")->applicable);
  EXPECT_TRUE(t.find("phi_upper_density")->asymptotic);
}

// Lower bounds never exceed the matching finite upper bounds.
TEST(Bounds, Sandwich) {
  for (int n = 1; n <= 6; ++n)
    for (Int h = 1; h <= 20; ++h) {
      BoundsTable t = bounds_report(h, n);
      const auto* up = t.find("phi_upper_trivial");
      if (!up->value) continue;
      for (const char* id : {"phi_lower_pigeonhole", "phi_lower_density", "phi_lower_classical"}) {
        const BoundEntry* lo = t.find(id);
        if (lo->applicable && lo->value) EXPECT_LE(*lo->value, *up->value) << id << ' ' << h << ' ' << n;
      }
      EXPECT_LE(*t.find("simplex_packing_density_lower")->value, *t.find("simplex_packing_density_upper")->value);
      EXPECT_LE(*t.find("phi_limit_lower")->value, *t.find("phi_limit_upper")->value);
    }
}

TEST(Bounds, OverflowReportedNotThrown) {
  BoundsTable t = bounds_report(1000, 9);
  const BoundEntry* up = t.find("phi_upper_trivial");
  ASSERT_NE(up, nullptr);
  EXPECT_FALSE(up->value.has_value());
  EXPECT_FALSE(up->note.empty());
  EXPECT_THROW(bounds_report(0, 2), Error);
}

// The formula values approach 2/3 from above for the density of the simplex of side h.
TEST(Bounds, DensityTrendTowardTwoThirds) {
  Rational prev(1);
  for (Int h : {4, 8, 12, 16}) {
    Int r = h / 2;
    Rational ratio = discrete_density_ratio(DensityKind::Packing, h, 2, 3 * r * r + 3 * r + 1);
    Rational gap = (ratio - Rational(2, 3)).abs();
    EXPECT_LE(gap, prev);
    prev = gap;
  }
  Rational at16 = discrete_density_ratio(DensityKind::Packing, 16, 2, 217);
  EXPECT_LT((at16 - Rational(2, 3)).abs() / Rational(2, 3), Rational(6, 100));
}
