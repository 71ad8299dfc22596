#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "dtile/constructions.hpp"
#include "dtile/error.hpp"
#include "dtile/patterns.hpp"
#include "dtile/tiling.hpp"
#include "oracles.hpp"

using namespace dtile;

TEST(MaxTiling, KnownInstances) {
  const auto r9 = max_tiling(round_tournament(9), directed_cycle(3));
  EXPECT_EQ(r9.optimality, Optimality::Proven);
  EXPECT_EQ(r9.tiling.tiles.size(), 3u);
  EXPECT_TRUE(verify_tiling(round_tournament(9), directed_cycle(3), r9.tiling));

  const auto rem = sharpness_graph(1, 1);
  const auto rr = max_tiling(rem.graph, directed_cycle(3), {}, &rem.parts);
  EXPECT_EQ(rr.optimality, Optimality::Proven);
  EXPECT_EQ(rr.tiling.tiles.size(), 3u);
  EXPECT_EQ(rr.tiling.covered.count(), 9);

  const auto edge = max_tiling(directed_cycle(3).graph, transitive_tournament(2));
  EXPECT_EQ(edge.tiling.tiles.size(), 1u);
}

TEST(MaxTiling, BudgetBoundKeepsValidTiling) {
  const auto g = round_tournament(15);
  const auto r = max_tiling(g, d_abc(1, 1, 2), {3, 1});
  EXPECT_EQ(r.optimality, Optimality::BudgetBound);
  EXPECT_TRUE(verify_tiling(g, d_abc(1, 1, 2), r.tiling));
}

TEST(MaxTiling, AgreesWithOracle) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 9);
    const auto g = oracle::random_oriented(n, 0.75, rng);
    const Pattern pat = trial % 2 ? directed_cycle(3) : d_abc(1, 1, 2);
    const auto r = max_tiling(g, pat);
    ASSERT_EQ(r.optimality, Optimality::Proven);
    EXPECT_TRUE(verify_tiling(g, pat, r.tiling));
    EXPECT_EQ(static_cast<int>(r.tiling.tiles.size()), oracle::max_tiling_size(oracle::Adj(pat.graph), oracle::Adj(g)));
  }
}

TEST(MaxTiling, RelabelingInvariant) {
  const auto rem = sharpness_graph(1, 1).graph;
  std::mt19937_64 rng(5);
  std::vector<int> perm(12);
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = 0; i < 20; ++i) {
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto r = max_tiling(oracle::permuted(rem, perm), directed_cycle(3));
    EXPECT_EQ(r.optimality, Optimality::Proven);
    EXPECT_EQ(r.tiling.tiles.size(), 3u);
  }
}

TEST(MaxTiling, MonotoneUnderEdgeAddition) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 5; ++trial) {
    const int n = 9;
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) pairs.push_back(rng() % 2 ? std::pair{u, v} : std::pair{v, u});
    std::shuffle(pairs.begin(), pairs.end(), rng);
    std::vector<Edge> es;
    std::size_t prev = 0;
    for (auto [u, v] : pairs) {
      es.push_back({u, v});
      const auto r = max_tiling(OrientedGraph::build(n, es), directed_cycle(3));
      ASSERT_EQ(r.optimality, Optimality::Proven);
      EXPECT_GE(r.tiling.tiles.size(), prev);
      prev = r.tiling.tiles.size();
    }
  }
}

TEST(Factor, KnownInstances) {
  const auto y = has_factor(round_tournament(8), d_abc(1, 1, 2));
  ASSERT_EQ(y.status, FactorStatus::Yes);
  EXPECT_EQ(y.tiling.covered.count(), 8);
  EXPECT_TRUE(verify_tiling(round_tournament(8), d_abc(1, 1, 2), y.tiling));
  EXPECT_EQ(has_factor(sharpness_graph(1, 1).graph, directed_cycle(3)).status, FactorStatus::No);
  EXPECT_EQ(has_factor(round_tournament(10), directed_cycle(3)).status, FactorStatus::No);
  EXPECT_EQ(has_factor(round_tournament(15), directed_cycle(3), {2, 1}).status, FactorStatus::Exhausted);
}

TEST(Factor, SixVertexTournamentsAgreeWithOracle) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const auto g = oracle::random_tournament(6, rng);
    const bool expected = oracle::has_factor(oracle::Adj(directed_cycle(3).graph), oracle::Adj(g));
    EXPECT_EQ(has_factor(g, directed_cycle(3)).status == FactorStatus::Yes, expected);
  }
}

TEST(TypedTiling, Demands) {
  const auto f = f_graph(1);
  TypeDemand cross;
  cross.cross = {1, 0, 0};
  const auto y = typed_tiling(f.graph, directed_cycle(3), f.parts, cross);
  ASSERT_EQ(y.status, FactorStatus::Yes);
  EXPECT_EQ(y.tiling.tiles[0].type->kind, TileKind::Cross);

  TypeDemand inside;
  inside.type = {1, 0, 0};
  EXPECT_EQ(typed_tiling(f.graph, d_abc(1, 1, 2), f.parts, inside).status, FactorStatus::No);

  TypeDemand all;
  all.type = {1, 1, 1};
  EXPECT_EQ(typed_tiling(f.graph, directed_cycle(3), f.parts, all).status, FactorStatus::Yes);
  TypeDemand mix;
  mix.type = {1, 0, 0};
  mix.cross = {2, 0, 0};
  EXPECT_EQ(typed_tiling(f.graph, directed_cycle(3), f.parts, mix).status, FactorStatus::No);

  TypeDemand bad;
  bad.cross = {1, 0, 0};
  EXPECT_THROW(typed_tiling(f.graph, directed_cycle(4), f.parts, bad), Error);
  bad.cross = {4, 0, 0};
  EXPECT_THROW(typed_tiling(f.graph, directed_cycle(3), f.parts, bad), Error);
  bad.cross = {-1, 0, 0};
  EXPECT_THROW(typed_tiling(f.graph, directed_cycle(3), f.parts, bad), Error);
}

TEST(TypedTiling, MatchesBalancingPlan) {
  // Sharpness graph with C3: residues (0,1,2) mod 3 admit no balancing plan, and
  // no tiling can take one vertex more from V2 than from V1.
  const auto rem = sharpness_graph(1, 1);
  EXPECT_FALSE(balancing_plan(1, 1, 1, {3, 4, 5}).has_value());
  TypeDemand d;
  d.type = {1, 1, 1};
  EXPECT_EQ(typed_tiling(rem.graph, directed_cycle(3), rem.parts, d).status, FactorStatus::Yes);
  const auto f = f_graph(1);
  const auto plan = balancing_plan(1, 1, 1, {3, 3, 3});
  ASSERT_TRUE(plan.has_value());
  TypeDemand p;
  p.cross = {static_cast<int>((*plan)[0]), static_cast<int>((*plan)[1]), static_cast<int>((*plan)[2])};
  EXPECT_EQ(typed_tiling(f.graph, directed_cycle(3), f.parts, p).status, FactorStatus::Yes);
}

TEST(Obstruction, Reports) {
  const auto f = f_graph(1);
  TypeDemand all;
  all.type = {1, 1, 1};
  const auto y = typed_tiling(f.graph, directed_cycle(3), f.parts, all);
  const auto rep = obstruction_report(f.graph, directed_cycle(3), f.parts, y.tiling);
  EXPECT_EQ(rep.t, (std::array<std::int64_t, 3>{1, 1, 1}));
  EXPECT_EQ(rep.residues, (std::array<std::int64_t, 3>{0, 0, 0}));
  EXPECT_TRUE(rep.consistent);
  EXPECT_EQ(rep.verdict, ObstructionVerdict::Feasible);

  const auto rem = sharpness_graph(1, 1);
  const auto best = max_tiling(rem.graph, directed_cycle(3));
  const auto rr = obstruction_report(rem.graph, directed_cycle(3), rem.parts, best.tiling);
  EXPECT_EQ(rr.residues, (std::array<std::int64_t, 3>{0, 1, 2}));
  EXPECT_EQ(rr.verdict, ObstructionVerdict::Infeasible);
  EXPECT_TRUE(rr.consistent);

  Tiling broken = best.tiling;
  broken.tiles.push_back(broken.tiles.front());
  EXPECT_THROW(obstruction_report(rem.graph, directed_cycle(3), rem.parts, broken), Error);
}
