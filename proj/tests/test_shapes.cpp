#include <gtest/gtest.h>

#include "oracles.hpp"
#include "sidon/shapes.hpp"

using namespace sidon;

namespace {

std::set<oracle::Vec> as_set(const PointSet& p) {
  std::set<oracle::Vec> out;
  for (const auto& x : p.points()) out.emplace(x.begin(), x.end());
  return out;
}

}  // namespace

TEST(Shapes, Examples) {
  EXPECT_EQ(shape_points(ShapeSpec::simplex(2, 3)).size(), 10u);
  PointSet hex = shape_points(ShapeSpec::diff(2, 1, 1));
  EXPECT_EQ(hex, PointSet(2, {{0, 0}, {1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, -1}, {-1, 1}}));
  EXPECT_EQ(shape_points(ShapeSpec::cross(2, 1)).size(), 5u);
  EXPECT_EQ(shape_cardinality(ShapeSpec::simplex(3, 2)), 10);
  EXPECT_EQ(shape_cardinality(ShapeSpec::diff(3, 1, 1)), 13);
  EXPECT_EQ(shape_cardinality(ShapeSpec::diff(2, 2, 2)), 19);
}

TEST(Shapes, SimplexCardinalityIsBinomial) {
  for (int n = 1; n <= 6; ++n)
    for (Int h = 0; h <= 12; ++h) {
      if (oracle::binomial(h + n, n) > 20000) continue;
      PointSet p = shape_points(ShapeSpec::simplex(n, h));
      EXPECT_EQ(static_cast<long long>(p.size()), oracle::binomial(h + n, n)) << n << ' ' << h;
      EXPECT_EQ(shape_cardinality(ShapeSpec::simplex(n, h)), oracle::binomial(h + n, n));
      auto expected = oracle::simplex(n, h);
      EXPECT_EQ(as_set(p), std::set<oracle::Vec>(expected.begin(), expected.end()));
    }
}

TEST(Shapes, DifferenceBodyMatchesPairwiseDifferences) {
  for (int n = 1; n <= 4; ++n)
    for (Int r = 0; r <= 4; ++r)
      for (Int t = 0; t <= 4; ++t) {
        if (n >= 4 && r + t > 4) continue;
        PointSet p = shape_points(ShapeSpec::diff(n, r, t));
        EXPECT_EQ(as_set(p), oracle::difference_body(n, r, t)) << n << ' ' << r << ' ' << t;
        EXPECT_EQ(shape_cardinality(ShapeSpec::diff(n, r, t)), static_cast<Int>(p.size()));
      }
  // n^2 + n + 1 for r = t = 1
  for (int n = 1; n <= 7; ++n) EXPECT_EQ(shape_cardinality(ShapeSpec::diff(n, 1, 1)), n * n + n + 1);
}

TEST(Shapes, CrossPolytopeMatchesOracle) {
  for (int n = 1; n <= 4; ++n)
    for (Int r = 0; r <= 4; ++r) EXPECT_EQ(as_set(shape_points(ShapeSpec::cross(n, r))), oracle::cross_polytope(n, r));
}

TEST(Shapes, ParseAndValidate) {
  EXPECT_EQ(ShapeSpec::parse("simplex:n=2,h=4"), ShapeSpec::simplex(2, 4));
  EXPECT_EQ(ShapeSpec::parse("diff:n=2,r=3,t=2"), ShapeSpec::diff(2, 3, 2));
  EXPECT_EQ(ShapeSpec::parse("cross:n=2,r=1"), ShapeSpec::cross(2, 1));
  for (const auto& s : {ShapeSpec::simplex(3, 5), ShapeSpec::diff(2, 3, 2), ShapeSpec::cross(4, 2)})
    EXPECT_EQ(ShapeSpec::parse(s.str()), s);
  for (const char* bad : {"simplex:n=0,h=2", "simplex:n=2", "diff:n=2,r=-1,t=0", "cube:n=2,h=1", "simplex:n=2,h=x"})
    EXPECT_THROW(ShapeSpec::parse(bad), Error) << bad;
}

TEST(Shapes, PointSetSortsAndDeduplicates) {
  PointSet p(2, {{1, 0}, {0, 0}, {1, 0}});
  EXPECT_EQ(p.size(), 2u);
  EXPECT_EQ(p.points().front(), (IntVector{0, 0}));
  EXPECT_TRUE(p.contains(IntVector{1, 0}));
  EXPECT_FALSE(p.contains(IntVector{0, 1}));
  EXPECT_THROW(PointSet(2, {{1, 0, 0}}), Error);
}

TEST(Shapes, SimplexWalkIsLexicographicAndStoppable) {
  std::vector<IntVector> seen;
  for_each_simplex_point(3, 3, [&](std::span<const Int> x) { seen.emplace_back(x.begin(), x.end()); });
  EXPECT_EQ(static_cast<long long>(seen.size()), oracle::binomial(6, 3));
  EXPECT_TRUE(std::is_sorted(seen.begin(), seen.end()));
  int visits = 0;
  for_each_simplex_point(3, 3, [&](std::span<const Int>) { return ++visits < 5; });
  EXPECT_EQ(visits, 5);
}
