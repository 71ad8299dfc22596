#include <gtest/gtest.h>

#include "dtile/digraph.hpp"
#include "dtile/error.hpp"
#include "dtile/patterns.hpp"
#include "oracles.hpp"

using namespace dtile;

TEST(Patterns, TransitiveTournaments) {
  EXPECT_EQ(transitive_tournament(1).order(), 1);
  const auto t3 = transitive_tournament(3).graph;
  EXPECT_EQ(t3.edge_count(), 3u);
  const auto p = degree_profile(transitive_tournament(4).graph);
  EXPECT_EQ(p.min_semi_degree, 0);
  EXPECT_EQ(p.min_total_degree, 3);
  EXPECT_TRUE(oracle::contains(oracle::Adj(t3), oracle::Adj(transitive_tournament(4).graph)));
  EXPECT_THROW(transitive_tournament(0), Error);
}

TEST(Patterns, CyclesAndPaths) {
  EXPECT_TRUE(directed_cycle(3).graph == d_abc(1, 1, 1).graph);
  EXPECT_EQ(directed_path(3).graph.edge_count(), 2u);
  EXPECT_EQ(degree_profile(directed_cycle(5).graph).min_semi_degree, 1);
  EXPECT_THROW(directed_cycle(2), Error);
  EXPECT_THROW(directed_path(0), Error);
}

TEST(Patterns, Powers) {
  EXPECT_TRUE(power(directed_path(3), 2).graph == transitive_tournament(3).graph);
  const auto c52 = power(directed_cycle(5), 2).graph;
  for (int v = 0; v < 5; ++v) {
    EXPECT_EQ(c52.out_degree(v), 2);
    EXPECT_EQ(c52.in_degree(v), 2);
  }
  try {
    power(directed_cycle(4), 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotOriented);
  }
  EXPECT_THROW(power(transitive_tournament(3), 2), Error);
}

TEST(Patterns, DabcStructure) {
  const auto d112 = d_abc(1, 1, 2);
  EXPECT_EQ(d112.order(), 4);
  EXPECT_TRUE(is_tournament(d112.graph));
  EXPECT_EQ(d112.role_sizes(), (std::array<int, 3>{1, 1, 2}));
  EXPECT_EQ(d_abc(2, 2, 2).graph.edge_count(), 15u);
  EXPECT_THROW(d_abc(0, 1, 1), Error);
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b)
      for (int c = 1; c <= 3; ++c) {
        const auto d = d_abc(a, b, c);
        EXPECT_TRUE(is_tournament(d.graph));
        // Hamiltonian cycle through all a+b+c vertices.
        EXPECT_TRUE(oracle::contains(oracle::Adj(directed_cycle(a + b + c).graph), oracle::Adj(d.graph)));
        // Reversal swaps the roles of A and C.
        EXPECT_TRUE(oracle::contains(oracle::Adj(reverse(d.graph)), oracle::Adj(d_abc(c, b, a).graph)));
        EXPECT_TRUE(oracle::contains(oracle::Adj(d_abc(c, b, a).graph), oracle::Adj(reverse(d.graph))));
      }
}

TEST(Patterns, CyclePowerInsideDk) {
  for (int k = 1; k <= 3; ++k) {
    const auto pat = power(directed_cycle(3 * k), k);
    EXPECT_TRUE(oracle::contains(oracle::Adj(pat.graph), oracle::Adj(d_abc(k, k, k).graph))) << k;
  }
}

TEST(Patterns, KFourMinus) {
  const auto k = k4_minus().graph;
  EXPECT_EQ(k.edge_count(), 5u);
  int nonadjacent = 0;
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v)
      if (!k.adjacent(u, v)) {
        ++nonadjacent;
        EXPECT_EQ(u, 0);
        EXPECT_EQ(v, 3);
      }
  EXPECT_EQ(nonadjacent, 1);
  oracle::Adj a(k);
  EXPECT_EQ(oracle::cyc(a, {0}, {1}, {2}), 1);
  EXPECT_EQ(oracle::cyc(a, {1}, {2}, {3}), 1);
  EXPECT_FALSE(oracle::contains(a, oracle::Adj(transitive_tournament(4).graph)));
}

TEST(Patterns, ParseSpecs) {
  EXPECT_EQ(parse_pattern("dabc:1,1,2").order(), 4);
  EXPECT_EQ(parse_pattern("tt:4").graph.edge_count(), 6u);
  EXPECT_EQ(parse_pattern("cyc:5").graph.edge_count(), 5u);
  EXPECT_EQ(parse_pattern("path:4").graph.edge_count(), 3u);
  EXPECT_EQ(parse_pattern("cycpow:6,2").graph.edge_count(), 12u);
  EXPECT_EQ(parse_pattern("pathpow:5,2").graph.edge_count(), 7u);
  EXPECT_EQ(parse_pattern("k4m").graph.edge_count(), 5u);
  for (const char* bad : {"", "dabc:1,1", "tt:x", "zz:3", "cycpow:4,2", "dabc:1,1,2,", "tt:3junk"}) {
    EXPECT_THROW(parse_pattern(bad), Error) << bad;
  }
  EXPECT_EQ(normalized(3, 1, 2), (std::array<int, 3>{1, 2, 3}));
}
