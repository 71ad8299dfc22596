#include <gtest/gtest.h>

#include <random>
#include <set>

#include "dtile/vertex_set.hpp"

using dtile::VertexSet;

TEST(VertexSet, BasicMembership) {
  VertexSet s(130, {0, 63, 64, 129});
  EXPECT_EQ(s.count(), 4);
  EXPECT_TRUE(s.test(63));
  EXPECT_TRUE(s.test(64));
  EXPECT_FALSE(s.test(65));
  EXPECT_EQ(s.first(), 0);
  EXPECT_EQ(s.next(0), 63);
  EXPECT_EQ(s.next(64), 129);
  EXPECT_EQ(s.next(129), -1);
  s.reset(0);
  EXPECT_EQ(s.first(), 63);
}

TEST(VertexSet, FullAndRangeRespectUniverse) {
  EXPECT_EQ(VertexSet::full(70).count(), 70);
  EXPECT_EQ(VertexSet::range(70, 60, 66).to_vector(), (std::vector<int>{60, 61, 62, 63, 64, 65}));
  EXPECT_TRUE(VertexSet(0).empty());
  EXPECT_EQ(VertexSet(0).first(), -1);
}

TEST(VertexSet, AlgebraMatchesStdSet) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 150);
    VertexSet a(n), b(n);
    std::set<int> sa, sb;
    for (int v = 0; v < n; ++v) {
      if (rng() % 3 == 0) a.set(v), sa.insert(v);
      if (rng() % 2 == 0) b.set(v), sb.insert(v);
    }
    std::set<int> inter, uni, diff;
    for (int v : sa) (sb.count(v) ? inter : diff).insert(v);
    uni = sa;
    uni.insert(sb.begin(), sb.end());
    EXPECT_EQ((a & b).to_vector(), std::vector<int>(inter.begin(), inter.end()));
    EXPECT_EQ((a | b).to_vector(), std::vector<int>(uni.begin(), uni.end()));
    EXPECT_EQ((a - b).to_vector(), std::vector<int>(diff.begin(), diff.end()));
    EXPECT_EQ(a.count_and(b), static_cast<int>(inter.size()));
    EXPECT_EQ(a.intersects(b), !inter.empty());
    EXPECT_EQ(a.is_subset_of(b), diff.empty());
    VertexSet c(n);
    c.assign_and(a, b);
    EXPECT_EQ(c, a & b);
    const std::vector<int> va(sa.begin(), sa.end()), vb(sb.begin(), sb.end());
    EXPECT_EQ(lex_less(a, b), va < vb);
  }
}

TEST(VertexSet, HashDistinguishesAndAgrees) {
  VertexSet a(20, {1, 2}), b(20, {1, 2}), c(20, {1, 3});
  EXPECT_EQ(a.hash(), b.hash());
  EXPECT_NE(a, c);
}
