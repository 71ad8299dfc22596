#include <gtest/gtest.h>

#include <random>

#include "dtile/constructions.hpp"
#include "dtile/error.hpp"
#include "dtile/extremal.hpp"
#include "dtile/parallel.hpp"
#include "dtile/patterns.hpp"
#include "oracles.hpp"

using namespace dtile;

namespace {

OrientedGraph flip(const OrientedGraph& g, int u, int v) {
  auto edges = g.edges();
  for (auto& e : edges)
    if (e.from == u && e.to == v) e = {v, u};
  return OrientedGraph::build(g.order(), edges);
}

Tripartition random_partition(int n, std::mt19937_64& rng) {
  std::vector<int> labels(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) labels[static_cast<std::size_t>(v)] = v % 3;
  std::shuffle(labels.begin(), labels.end(), rng);
  return Tripartition::from_labels(labels);
}

bool same_up_to_rotation(const Tripartition& a, const Tripartition& b) {
  for (int r = 0; r < 3; ++r) {
    bool ok = true;
    for (int i = 0; i < 3; ++i) ok = ok && a.part(i) == b.part(i + r);
    if (ok) return true;
  }
  return false;
}

}  // namespace

TEST(Extremal, FGraphAtZero) {
  const auto f = f_graph(2);
  const auto r = is_extremal(f.graph, f.parts, {});
  EXPECT_TRUE(r.extremal);
  for (const auto& p : r.parts) {
    EXPECT_EQ(p.size, 6);
    EXPECT_EQ(p.backward_edges, 0u);
  }
  EXPECT_EQ(r.edge_matrix[0][1], 36u);
  EXPECT_EQ(r.edge_matrix[0][0], 12u);
  EXPECT_TRUE(is_superextremal(f.graph, f.parts, {}).superextremal);
}

TEST(Extremal, PlantedDefectReported) {
  const auto f = f_graph(2);
  const int u = f.parts.part(0).first();
  const int v = f.parts.part(1).first();
  const auto g = flip(f.graph, u, v);
  const auto r = is_extremal(g, f.parts, {});
  EXPECT_FALSE(r.extremal);
  EXPECT_FALSE(r.parts[0].edges_ok);
  EXPECT_EQ(r.parts[0].backward_edges, 1u);
  EXPECT_TRUE(r.parts[1].edges_ok);
  EXPECT_TRUE(is_extremal(g, f.parts, {.gamma = 0.01}).extremal);
}

TEST(Extremal, RejectsBadParameters) {
  const auto f = f_graph(1);
  EXPECT_THROW(is_extremal(f.graph, f.parts, {.gamma = -1}), Error);
  EXPECT_THROW(is_extremal(f.graph, f.parts, {.gamma = 0.1, .c1 = 0}), Error);
  EXPECT_THROW(good_vertices(f.graph, f.parts, -1), Error);
  EXPECT_THROW(is_extremal(round_tournament(5), f.parts, {}), Error);
}

TEST(Superextremal, NoFactorTournament) {
  const auto t = no_factor_tournament_abc(2, 2, 4, 1);
  const auto r = is_superextremal(t.graph, t.parts, {.gamma = 0.05});
  EXPECT_TRUE(r.superextremal);
  EXPECT_TRUE(r.offending.empty());
  const auto good = good_vertices(t.graph, t.parts, 0);
  EXPECT_EQ(t.graph.order() - good.count(), 16);
  EXPECT_EQ(good_vertices(t.graph, t.parts, 1).count(), t.graph.order());
}

TEST(Superextremal, ImpliesExtremal) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 6 + trial % 10;
    const auto g = oracle::random_oriented(n, 0.7, rng);
    const auto parts = random_partition(n, rng);
    const ExtremalParams p{.gamma = 0.05 * (trial % 8)};
    const auto s = is_superextremal(g, parts, p);
    if (s.superextremal) EXPECT_TRUE(s.extremal.extremal);
    EXPECT_EQ(s.extremal.extremal, is_extremal(g, parts, p).extremal);
  }
}

TEST(GoodVertices, MonotoneInSlack) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 9 + trial;
    const auto g = oracle::random_tournament(n, rng);
    const auto parts = random_partition(n, rng);
    VertexSet prev = good_vertices(g, parts, 0);
    for (int s = 1; s <= n; ++s) {
      const auto cur = good_vertices(g, parts, s);
      EXPECT_TRUE(prev.is_subset_of(cur));
      prev = cur;
    }
    EXPECT_EQ(prev.count(), n);
  }
}

TEST(Transfer, PlantedBackwardEdge) {
  const auto r5 = round_tournament(5);
  const auto pure = c3_blowup_of(r5, r5, r5);
  const auto c3 = directed_cycle(3);
  const VertexSet none(15);

  const auto a = find_transfer_witness(pure.graph, c3, pure.parts, 0, 1, none);
  EXPECT_TRUE(a.complete);
  EXPECT_FALSE(a.witness.has_value());

  const int v = pure.parts.part(0).first();
  const int u = pure.parts.part(1).first();
  const auto g = flip(pure.graph, v, u);
  const auto b = find_transfer_witness(g, c3, pure.parts, 0, 1, none);
  ASSERT_TRUE(b.witness.has_value());
  const auto& w = *b.witness;
  EXPECT_TRUE(w.set.test(u));
  EXPECT_TRUE(w.set.test(v));
  EXPECT_EQ(w.set.count_and(pure.parts.part(0)) % 3, 1);
  EXPECT_EQ(w.set.count_and(pure.parts.part(1)) % 3, 2);
  EXPECT_LE(w.set.count(), 9);
  EXPECT_EQ(w.factor.covered, w.set);
  EXPECT_TRUE(verify_tiling(g, c3, w.factor));

  // Excluding one endpoint kills every witness.
  const auto c = find_transfer_witness(g, c3, pure.parts, 0, 1, VertexSet(15, {u}));
  EXPECT_FALSE(c.witness.has_value());
}

TEST(Transfer, RejectsPattern) {
  const auto f = f_graph(1);
  EXPECT_THROW(find_transfer_witness(f.graph, d_abc(2, 2, 2), f.parts, 0, 1, VertexSet(9)), Error);
  EXPECT_THROW(find_transfer_witness(f.graph, directed_cycle(3), f.parts, 1, 1, VertexSet(9)), Error);
}

TEST(Tripartition, RecoversFGraph) {
  const auto f = f_graph(2);
  const auto r = best_tripartition(f.graph, 8, 1);
  EXPECT_EQ(r.backward, 0u);
  EXPECT_EQ(backward_edges(f.graph, r.parts), 0u);
  EXPECT_TRUE(same_up_to_rotation(r.parts, f.parts));
}

TEST(Tripartition, TriangleAndErrors) {
  const auto c3 = directed_cycle(3).graph;
  EXPECT_EQ(best_tripartition(c3, 2, 0).backward, 0u);
  EXPECT_THROW(best_tripartition(directed_path(2).graph, 1, 0), Error);
}

TEST(Tripartition, TrailNeverIncreases) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 10; ++trial) {
    const auto g = oracle::random_tournament(12 + trial, rng);
    const auto r = best_tripartition(g, 3, static_cast<std::uint64_t>(trial));
    ASSERT_FALSE(r.trail.empty());
    for (std::size_t k = 1; k < r.trail.size(); ++k) EXPECT_LE(r.trail[k], r.trail[k - 1]);
    EXPECT_EQ(r.trail.back(), r.backward);
    EXPECT_EQ(backward_edges(g, r.parts), r.backward);
  }
}

TEST(Tripartition, DeterministicAcrossThreads) {
  std::mt19937_64 rng(2);
  const auto g = oracle::random_tournament(21, rng);
  set_thread_count(1);
  const auto a = best_tripartition(g, 6, 42);
  set_thread_count(4);
  const auto b = best_tripartition(g, 6, 42);
  set_thread_count(0);
  EXPECT_EQ(a.parts, b.parts);
  EXPECT_EQ(a.trail, b.trail);
}
