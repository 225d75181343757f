#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "sidon/correspondence.hpp"

using namespace sidon;

namespace {

std::vector<GroupElement> cyclic_set(std::initializer_list<Int> values) {
  std::vector<GroupElement> out;
  for (Int v : values) out.push_back(GroupElement{{v}});
  return out;
}

RationalMatrix rational(std::initializer_list<std::initializer_list<Rational>> rows) {
  RationalMatrix m;
  for (auto r : rows) m.emplace_back(r);
  return m;
}

}  // namespace

TEST(BhToPacking, Examples) {
  LatticeConversion a = bh_to_packing(AbelianGroup::cyclic(7), cyclic_set({0, 1, 3}), 2);
  EXPECT_EQ(a.lattice.hnf(), (IntMatrix{{7, 0}, {4, 1}}));
  EXPECT_EQ(a.verdict.arrangement, Arrangement::PackingOnly);

  for (Int h = 1; h <= 10; ++h) {
    LatticeConversion b = bh_to_packing(AbelianGroup::cyclic(h + 1), cyclic_set({0, 1}), h);
    EXPECT_EQ(b.lattice.hnf(), (IntMatrix{{h + 1}}));
    EXPECT_EQ(b.verdict.arrangement, Arrangement::Tiling);
  }

  ASSERT_TRUE(oracle::is_bh({19}, {{0}, {1}, {8}}, 4));
  LatticeConversion c = bh_to_packing(AbelianGroup::cyclic(19), cyclic_set({0, 1, 8}), 4);
  EXPECT_EQ(c.lattice.det(), 19);
  EXPECT_EQ(c.verdict.arrangement, Arrangement::PackingOnly);
}

TEST(BhToPacking, RejectsNonBhWithWitness) {
  try {
    bh_to_packing(AbelianGroup::cyclic(7), cyclic_set({0, 1, 2}), 2);
    FAIL();
  } catch (const VerdictError& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotABhSet);
    EXPECT_TRUE(e.verdict().collision.has_value());
  }
}

TEST(PackingToBh, Examples) {
  GroupConversion a = packing_to_bh(hnf(IntMatrix{{7, 0}, {4, 1}}), 2);
  EXPECT_EQ(a.group, AbelianGroup::cyclic(7));
  ASSERT_EQ(a.set.size(), 3u);
  EXPECT_EQ(a.set[0], a.group.zero());
  EXPECT_TRUE(a.verdict.holds);
  std::vector<oracle::Vec> as_oracle;
  for (const auto& e : a.set) as_oracle.emplace_back(e.coords.begin(), e.coords.end());
  EXPECT_TRUE(oracle::is_bh({7}, as_oracle, 2));

  GroupConversion b = packing_to_bh(hnf(IntMatrix{{6}}), 5);
  EXPECT_EQ(b.group, AbelianGroup::cyclic(6));
  EXPECT_EQ(b.set, cyclic_set({0, 1}));

  GroupConversion c = packing_to_bh(hnf(IntMatrix{{3, 0}, {0, 3}}), 1);
  EXPECT_EQ(c.group.factors(), (IntVector{3, 3}));
  EXPECT_EQ(c.set, (std::vector<GroupElement>{{{0, 0}}, {{1, 0}}, {{0, 1}}}));
  EXPECT_TRUE(c.verdict.holds);
}

TEST(PackingToBh, RejectsNonPacking) {
  try {
    packing_to_bh(hnf(IntMatrix{{2, 0}, {0, 2}}), 2);
    FAIL();
  } catch (const VerdictError& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotAPacking);
    EXPECT_TRUE(e.verdict().collision.has_value());
  }
}

TEST(Covering, Examples) {
  LatticeConversion a = basis_to_covering(AbelianGroup::cyclic(3), cyclic_set({0, 1}), 2);
  EXPECT_EQ(a.lattice.hnf(), (IntMatrix{{3}}));
  EXPECT_EQ(a.verdict.arrangement, Arrangement::Tiling);

  try {
    covering_to_basis(hnf(IntMatrix{{7, 0}, {4, 1}}), 2);
    FAIL();
  } catch (const VerdictError& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotACovering);
    ASSERT_TRUE(e.verdict().uncovered.has_value());
    EXPECT_EQ(e.verdict().distinct, 6);
  }

  LatticeConversion c = basis_to_covering(AbelianGroup::cyclic(7), cyclic_set({0, 1, 3, 5}), 2);
  EXPECT_EQ(c.lattice.dim(), 3u);
  EXPECT_EQ(c.lattice.det(), 7);
  EXPECT_EQ(c.verdict.arrangement, Arrangement::CoveringOnly);
  GroupConversion back = covering_to_basis(c.lattice, 2);
  EXPECT_EQ(back.group.order(), 7);
  EXPECT_TRUE(back.verdict.holds);
}

// Every B_h set in a small group maps to a packing and back to a B_h set of the same order.
TEST(Roundtrip, BhSetsInSmallGroups) {
  for (Int m = 2; m <= 20; ++m)
    for (const auto& f : oracle::abelian_groups(m)) {
      AbelianGroup g(IntVector(f.begin(), f.end()));
      for (Int h = 1; h <= 3; ++h)
        oracle::for_each_subset_with_zero(f, 3, [&](const std::vector<oracle::Vec>& s) {
          if (!oracle::is_bh(f, s, h)) return false;
          std::vector<GroupElement> set;
          for (const auto& e : s) set.push_back(GroupElement{IntVector(e.begin(), e.end())});
          std::vector<GroupElement> tail(set.begin() + 1, set.end());
          bool generating = relation_lattice(g, tail).det() == m;
          if (!generating) return false;
          LatticeConversion p = bh_to_packing(g, set, h);
          EXPECT_EQ(p.lattice.det(), m);
          GroupConversion back = packing_to_bh(p.lattice, h);
          EXPECT_EQ(back.group, g);
          EXPECT_TRUE(back.verdict.holds);
          return false;
        });
    }
}

TEST(Roundtrip, HBasesInSmallGroups) {
  for (Int m = 2; m <= 12; ++m)
    for (const auto& f : oracle::abelian_groups(m)) {
      AbelianGroup g(IntVector(f.begin(), f.end()));
      for (Int h = 1; h <= 4; ++h)
        oracle::for_each_subset_with_zero(f, 3, [&](const std::vector<oracle::Vec>& s) {
          if (!oracle::is_h_basis(f, s, h)) return false;
          std::vector<GroupElement> set;
          for (const auto& e : s) set.push_back(GroupElement{IntVector(e.begin(), e.end())});
          LatticeConversion c = basis_to_covering(g, set, h);
          EXPECT_EQ(c.lattice.det(), m);
          EXPECT_TRUE(c.verdict.arrangement == Arrangement::CoveringOnly ||
                      c.verdict.arrangement == Arrangement::Tiling);
          GroupConversion back = covering_to_basis(c.lattice, h);
          EXPECT_EQ(back.group, g);
          EXPECT_TRUE(back.verdict.holds);
          return false;
        });
    }
}

TEST(Discretize, Examples) {
  RationalMatrix id = rational({{1, 0}, {0, 1}});
  Discretization a = discretize_lattice(id, 3, Rational(1, 3));
  EXPECT_EQ(a.lattice.hnf(), (IntMatrix{{3, 0}, {0, 3}}));
  EXPECT_EQ(a.sidelength, 2);
  EXPECT_EQ(a.points, 6);
  EXPECT_EQ(a.verdict.arrangement, Arrangement::PackingOnly);
  EXPECT_EQ(a.density, Rational(6, 9));

  Discretization b = discretize_lattice(id, 3, Rational(0));
  EXPECT_EQ(b.points, 10);
  EXPECT_FALSE(b.verdict.arrangement == Arrangement::PackingOnly || b.verdict.arrangement == Arrangement::Tiling);

  Discretization c = discretize_lattice(rational({{Rational(7, 4), 0}, {1, Rational(1, 4)}}), 4, Rational(0));
  EXPECT_EQ(c.lattice.hnf(), (IntMatrix{{7, 0}, {4, 1}}));
  EXPECT_EQ(c.points, 15);
  EXPECT_FALSE(c.verdict.arrangement == Arrangement::PackingOnly);
}

TEST(Discretize, TiesRoundUpAndErrors) {
  // 1/2 * 1 = 0.5 rounds to 1; -1/2 rounds to 0
  Discretization d = discretize_lattice(rational({{Rational(3, 2), 0}, {Rational(-1, 2), 1}}), 1, Rational(0));
  EXPECT_EQ(d.lattice, hnf(IntMatrix{{2, 0}, {0, 1}}));
  EXPECT_THROW(discretize_lattice(rational({{1, 2}, {2, 4}}), 3, Rational(0)), Error);
  try {
    discretize_lattice(rational({{Rational(1, 10), 0}, {0, 1}}), 1, Rational(0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegenerateRounding);
  }
  EXPECT_THROW(discretize_lattice(rational({{1, 0}, {0, 1}}), 3, Rational(1)), Error);
}

TEST(Discretize, SmallestPackingScale) {
  // hexagonal-type basis (1, 0), (1/2, 1): det 1; small h round badly
  RationalMatrix v = rational({{Rational(3, 2), 0}, {Rational(1, 2), Rational(3, 2)}});
  auto d = smallest_packing_discretization(v, Rational(1, 4), 20);
  ASSERT_TRUE(d.has_value());
  for (Int h = 1; h < d->h; ++h) {
    try {
      auto e = discretize_lattice(v, h, Rational(1, 4));
      EXPECT_FALSE(e.verdict.arrangement == Arrangement::PackingOnly || e.verdict.arrangement == Arrangement::Tiling);
    } catch (const Error&) {
    }
  }
  EXPECT_FALSE(smallest_packing_discretization(rational({{Rational(1, 2), 0}, {0, Rational(1, 2)}}), Rational(0), 10));
}
