#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "sidon/abelian_group.hpp"
#include "sidon/correspondence.hpp"

using namespace sidon;

namespace {

GroupElement el(IntVector v) { return GroupElement{std::move(v)}; }

}  // namespace

TEST(AbelianGroupTest, Validation) {
  EXPECT_THROW(AbelianGroup(IntVector{2, 3}), Error);
  EXPECT_THROW(AbelianGroup(IntVector{1, 4}), Error);
  EXPECT_NO_THROW(AbelianGroup(IntVector{2, 6}));
  EXPECT_EQ(AbelianGroup().order(), 1);
  EXPECT_EQ(AbelianGroup::from_invariant_factors(IntVector{1, 1, 7}).factors(), (IntVector{7}));
  EXPECT_THROW(AbelianGroup::cyclic(7).require(el({7})), Error);
  EXPECT_THROW(AbelianGroup::cyclic(7).require(el({1, 0})), Error);
}

TEST(AbelianGroupTest, ElementCombine) {
  auto z7 = AbelianGroup::cyclic(7);
  std::vector<GroupElement> e{el({1}), el({3})};
  EXPECT_EQ(element_combine(z7, IntVector{2, 1}, e), el({5}));
  EXPECT_EQ(element_combine(z7, IntVector{0, 0}, e), el({0}));
  AbelianGroup v4(IntVector{2, 2});
  std::vector<GroupElement> f{el({1, 0}), el({1, 1})};
  EXPECT_EQ(element_combine(v4, IntVector{1, 1}, f), el({0, 1}));
  EXPECT_EQ(element_combine(z7, IntVector{-1, 0}, e), el({6}));
  EXPECT_THROW(element_combine(z7, IntVector{1}, e), Error);
}

TEST(AbelianGroupTest, IsCyclic) {
  EXPECT_TRUE(is_cyclic(AbelianGroup::cyclic(7)));
  EXPECT_FALSE(is_cyclic(AbelianGroup(IntVector{2, 2})));
  EXPECT_TRUE(is_cyclic(AbelianGroup()));
}

TEST(AbelianGroupTest, IndexRoundtrip) {
  AbelianGroup g(IntVector{2, 6, 12});
  ASSERT_EQ(g.order(), 144);
  for (Int i = 0; i < g.order(); ++i) {
    GroupElement e = g.element_at(i);
    EXPECT_TRUE(g.contains(e));
    EXPECT_EQ(g.index(e), i);
  }
}

TEST(AbelianGroupTest, ArithmeticMatchesOracle) {
  AbelianGroup g(IntVector{3, 6});
  oracle::Vec f{3, 6};
  for (const auto& a : oracle::group_elements(f))
    for (const auto& b : oracle::group_elements(f)) {
      auto sum = oracle::group_add(f, a, b);
      EXPECT_EQ(g.add(el(IntVector(a.begin(), a.end())), el(IntVector(b.begin(), b.end()))).coords,
                IntVector(sum.begin(), sum.end()));
    }
  EXPECT_EQ(g.sub(el({0, 0}), el({1, 5})), el({2, 1}));
  EXPECT_EQ(g.scale(-2, el({1, 1})), el({1, 4}));
}

TEST(GroupFromLattice, Examples) {
  auto q = group_from_lattice(hnf(IntMatrix{{7, 0}, {4, 1}}));
  EXPECT_EQ(q.group.factors(), (IntVector{7}));
  std::set<GroupElement> generated;
  for (Int a = 0; a < 7; ++a)
    for (Int b = 0; b < 7; ++b) generated.insert(q.projection(IntVector{a, b}));
  EXPECT_EQ(generated.size(), 7u);

  auto t = group_from_lattice(hnf(IntMatrix{{1, 0}, {0, 1}}));
  EXPECT_EQ(t.group.order(), 1);
  EXPECT_TRUE(t.group.factors().empty());

  EXPECT_EQ(group_from_lattice(hnf(IntMatrix{{2, 0}, {0, 2}})).group.factors(), (IntVector{2, 2}));
}

// The projection is a surjective homomorphism whose kernel is exactly L.
TEST(GroupFromLattice, ProjectionKernelIsTheLattice) {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<Int> dist(-5, 5);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = 2 + trial % 2;
    IntMatrix a(n, n);
    do {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = dist(rng);
    } while (a.determinant() == 0 || std::llabs(a.determinant()) > 60);
    Lattice l = hnf(a);
    QuotientGroup q = group_from_lattice(l);
    EXPECT_EQ(q.group.order(), l.det());
    CosetIndexer idx(l);
    std::set<GroupElement> images;
    for (Int i = 0; i < idx.size(); ++i) images.insert(q.projection(idx.representative(i)));
    EXPECT_EQ(static_cast<Int>(images.size()), l.det());
    for (int k = 0; k < 30; ++k) {
      IntVector x(n), y(n), s(n);
      for (std::size_t i = 0; i < n; ++i) {
        x[i] = dist(rng) * 3;
        y[i] = dist(rng) * 2;
        s[i] = x[i] + y[i];
      }
      EXPECT_EQ(q.projection(s), q.group.add(q.projection(x), q.projection(y)));
      EXPECT_EQ(q.projection(x) == q.group.zero(), l.contains(x));
    }
  }
}

TEST(KernelLattice, Examples) {
  auto z7 = AbelianGroup::cyclic(7);
  std::vector<GroupElement> e{el({1}), el({3})};
  EXPECT_EQ(kernel_lattice(z7, e).hnf(), (IntMatrix{{7, 0}, {4, 1}}));
  std::vector<GroupElement> zeros{GroupElement{}, GroupElement{}};
  EXPECT_EQ(kernel_lattice(AbelianGroup(), zeros).hnf(), IntMatrix::identity(2));
  AbelianGroup v4(IntVector{2, 2});
  std::vector<GroupElement> f{el({1, 0}), el({0, 1})};
  EXPECT_EQ(kernel_lattice(v4, f).hnf(), (IntMatrix{{2, 0}, {0, 2}}));
  std::vector<GroupElement> g{el({1, 0}), el({1, 0})};
  try {
    kernel_lattice(v4, g);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::NotGenerating);
  }
}

// det(relation lattice) equals the size of the generated subgroup.
TEST(KernelLattice, DeterminantIsSubgroupOrder) {
  std::mt19937_64 rng(22);
  for (const IntVector& factors : {IntVector{12}, IntVector{2, 6}, IntVector{3, 3}, IntVector{2, 2, 4}}) {
    AbelianGroup g(factors);
    for (int trial = 0; trial < 25; ++trial) {
      std::size_t n = 1 + trial % 3;
      std::vector<GroupElement> elems;
      std::uniform_int_distribution<Int> pick(0, g.order() - 1);
      for (std::size_t i = 0; i < n; ++i) elems.push_back(g.element_at(pick(rng)));
      std::set<GroupElement> sub{g.zero()};
      for (bool grew = true; grew;) {
        grew = false;
        for (auto s : std::vector<GroupElement>(sub.begin(), sub.end()))
          for (const auto& e : elems) grew |= sub.insert(g.add(s, e)).second;
      }
      Lattice l = relation_lattice(g, elems);
      EXPECT_EQ(l.det(), static_cast<Int>(sub.size()));
      if (static_cast<Int>(sub.size()) == g.order()) {
        EXPECT_EQ(kernel_lattice(g, elems), l);
      } else {
        EXPECT_THROW(kernel_lattice(g, elems), Error);
      }
      for (std::size_t i = 0; i < n; ++i) {
        IntVector row(l.hnf().row(i).begin(), l.hnf().row(i).end());
        EXPECT_EQ(element_combine(g, row, elems), g.zero());
      }
    }
  }
}
