#include <gtest/gtest.h>

#include <random>

#include "dtile/constructions.hpp"
#include "dtile/digraph.hpp"
#include "dtile/error.hpp"
#include "dtile/patterns.hpp"
#include "oracles.hpp"

using namespace dtile;

namespace {

OrientedGraph c3() {
  const Edge es[] = {{0, 1}, {1, 2}, {2, 0}};
  return OrientedGraph::build(3, es);
}

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an error";
  return ErrorCode::Io;
}

}  // namespace

TEST(Digraph, BuildRejectsBadEdges) {
  EXPECT_EQ(code_of([] { const Edge e[] = {{0, 1}, {1, 0}}; OrientedGraph::build(2, e); }), ErrorCode::TwoCycle);
  EXPECT_EQ(code_of([] { const Edge e[] = {{1, 1}}; OrientedGraph::build(2, e); }), ErrorCode::LoopEdge);
  EXPECT_EQ(code_of([] { const Edge e[] = {{0, 2}}; OrientedGraph::build(2, e); }), ErrorCode::OutOfRange);
}

TEST(Digraph, DuplicatesCollapse) {
  const Edge e[] = {{0, 1}, {0, 1}};
  EXPECT_EQ(OrientedGraph::build(2, e).edge_count(), 1u);
}

TEST(Digraph, TriangleDegrees) {
  const auto p = degree_profile(c3());
  EXPECT_EQ(p.min_semi_degree, 1);
  EXPECT_EQ(p.min_total_degree, 2);
  EXPECT_TRUE(is_tournament(c3()));
  EXPECT_TRUE(is_semiregular_tournament(c3()));
  EXPECT_FALSE(is_semiregular_tournament(transitive_tournament(3).graph));
  EXPECT_EQ(degree_profile(OrientedGraph::build(0, {})).min_semi_degree, 0);
}

TEST(Digraph, ExcluderIsThreeRegular) {
  const auto g = square_excluder(1).graph;
  EXPECT_EQ(g.edge_count(), 24u);
  const auto p = degree_profile(g);
  for (int v = 0; v < 8; ++v) {
    EXPECT_EQ(p.out[v], 3);
    EXPECT_EQ(p.in[v], 3);
  }
  EXPECT_EQ(p.min_semi_degree, 3);
}

TEST(Digraph, ReverseIsInvolution) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 100; ++t) {
    const auto g = oracle::random_oriented(1 + static_cast<int>(rng() % 20), 0.5, rng);
    const auto r = reverse(g);
    EXPECT_EQ(reverse(r), g);
    for (int v = 0; v < g.order(); ++v) EXPECT_EQ(g.out_degree(v), r.in_degree(v));
    EXPECT_EQ(is_semiregular_tournament(g), is_semiregular_tournament(r));
  }
}

TEST(Digraph, InducedSubgraphs) {
  const auto e = induced(c3(), VertexSet(3, {0, 1}));
  EXPECT_EQ(e.graph.order(), 2);
  EXPECT_EQ(e.graph.edge_count(), 1u);
  const auto f = f_graph(1);
  const auto tri = induced(f.graph, f.parts.part(0));
  EXPECT_TRUE(tri.graph == directed_cycle(3).graph);
  EXPECT_EQ(induced(c3(), VertexSet(3)).graph.order(), 0);
  EXPECT_THROW(induced(c3(), VertexSet(4)), Error);
}

TEST(Digraph, InducedComposes) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 30; ++t) {
    const auto g = oracle::random_oriented(16, 0.6, rng);
    VertexSet s(16);
    for (int v = 0; v < 16; ++v)
      if (rng() % 2) s.set(v);
    const auto gs = induced(g, s);
    VertexSet t2(gs.graph.order());
    for (int v = 0; v < gs.graph.order(); ++v)
      if (rng() % 2) t2.set(v);
    const auto inner = induced(gs.graph, t2);
    VertexSet composed(16);
    for (int v : t2.to_vector()) composed.set(gs.to_host[v]);
    EXPECT_TRUE(induced(g, composed).graph == inner.graph);
  }
}

TEST(Digraph, BlowUpArithmetic) {
  EXPECT_TRUE(blow_up(c3(), 1) == c3());
  std::mt19937_64 rng(5);
  for (int t = 1; t <= 3; ++t) {
    const auto g = oracle::random_oriented(7, 0.5, rng);
    const auto b = blow_up(g, t);
    EXPECT_EQ(b.edge_count(), static_cast<std::size_t>(t * t) * g.edge_count());
    for (int u = 0; u < 7; ++u)
      for (int i = 0; i < t; ++i) EXPECT_EQ(b.out_degree(u * t + i), t * g.out_degree(u));
  }
  const auto p2 = square_excluder(2).graph;
  EXPECT_EQ(p2.order(), 16);
  EXPECT_EQ(degree_profile(p2).min_semi_degree, 6);
  const auto f2 = f_graph(2).graph;
  EXPECT_EQ(f2.order(), 18);
  EXPECT_EQ(degree_profile(f2).min_semi_degree, 8);
  EXPECT_EQ(f2.edge_count(), 144u);
}

TEST(Digraph, PairStats) {
  // Vertex 2 is an in-neighbour of 0 and an out-neighbour of 1.
  const auto s = pair_stats(c3(), 0, 1, VertexSet::full(3));
  EXPECT_EQ(s.in_out, 1);
  EXPECT_EQ(s.out_out + s.out_in + s.in_in, 0);
  EXPECT_THROW(pair_stats(c3(), 1, 1, VertexSet::full(3)), Error);
  std::mt19937_64 rng(9);
  const auto t = oracle::random_tournament(12, rng);
  VertexSet rest = VertexSet::full(12);
  rest.reset(2);
  rest.reset(5);
  const auto q = pair_stats(t, 2, 5, rest);
  EXPECT_EQ(q.out_out + q.out_in + q.in_out + q.in_in, 10);
  // x2 = 1, x3 = 2, V2 = {x5, x6, x7}: only x6 is a common out-neighbour.
  const auto fig = square_excluder(1);
  const auto r = pair_stats(fig.graph, 1, 2, fig.parts.part(1));
  EXPECT_EQ(r.out_out, 1);
  EXPECT_EQ(r.out_in, 0);
  EXPECT_EQ(r.in_out, 0);
  EXPECT_EQ(r.in_in, 0);
}

TEST(Digraph, CrossEdges) {
  EXPECT_EQ(cross_edges(c3(), VertexSet(3, {0}), VertexSet(3, {1})), 1u);
  EXPECT_EQ(cross_edges(c3(), VertexSet(3, {1}), VertexSet(3, {0})), 0u);
  const auto f = f_graph(1);
  EXPECT_EQ(cross_edges(f.graph, f.parts.part(0), f.parts.part(1)), 9u);
  EXPECT_EQ(cross_edges(f.graph, f.parts.part(1), f.parts.part(0)), 0u);
  std::mt19937_64 rng(1);
  for (int t = 0; t < 20; ++t) {
    const auto g = oracle::random_oriented(14, 0.5, rng);
    VertexSet a(14);
    for (int v = 0; v < 14; ++v)
      if (rng() % 2) a.set(v);
    EXPECT_EQ(cross_edges(g, a, a), induced(g, a).graph.edge_count());
  }
}

TEST(Digraph, TripartitionValidation) {
  EXPECT_THROW(Tripartition(3, {VertexSet(3, {0}), VertexSet(3, {0}), VertexSet(3, {2})}), Error);
  EXPECT_THROW(Tripartition(3, {VertexSet(3, {0}), VertexSet(3, {1}), VertexSet(3)}), Error);
  const int labels[] = {2, 0, 1, 1};
  const auto t = Tripartition::from_labels(labels);
  EXPECT_EQ(t.part(-1).to_vector(), std::vector<int>{0});
  EXPECT_EQ(t.part(4).to_vector(), (std::vector<int>{2, 3}));
  EXPECT_EQ(t.sizes(), (std::array<int, 3>{1, 2, 1}));
}

TEST(Digraph, EdgeListRoundTrip) {
  const auto f = f_graph(1);
  const std::string text = write_edge_list(f.graph, nullptr, &f.parts);
  const auto doc = parse_edge_list(text);
  EXPECT_TRUE(doc.graph == f.graph);
  ASSERT_TRUE(doc.parts.has_value());
  EXPECT_TRUE(*doc.parts == f.parts);
  const auto d = d_abc(1, 1, 2);
  const auto doc2 = parse_edge_list(write_edge_list(d.graph, &*d.roles));
  ASSERT_TRUE(doc2.roles.has_value());
  EXPECT_EQ(*doc2.roles, *d.roles);
}

TEST(Digraph, EdgeListErrors) {
  EXPECT_THROW(parse_edge_list(""), Error);
  EXPECT_THROW(parse_edge_list("3\n0 1 2\n"), Error);
  EXPECT_THROW(parse_edge_list("3\n0 x\n"), Error);
  EXPECT_THROW(parse_edge_list("2\n0 1\n1 0\n"), Error);
  const auto doc = parse_edge_list("# comment\n3\n\n0 1\n# more\n1 2\n");
  EXPECT_EQ(doc.graph.edge_count(), 2u);
}

TEST(Digraph, DotExport) {
  const auto f = f_graph(1);
  const std::string dot = write_dot(f.graph, &f.parts);
  EXPECT_NE(dot.find("digraph"), std::string::npos);
  EXPECT_NE(dot.find("0 -> 1"), std::string::npos);
  EXPECT_NE(dot.find("forestgreen"), std::string::npos);
}
