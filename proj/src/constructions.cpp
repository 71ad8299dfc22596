#include "dtile/constructions.hpp"

#include <algorithm>

#include "dtile/error.hpp"
#include "dtile/patterns.hpp"

namespace dtile {

OrientedGraph round_digraph(const RoundSpec& spec) {
  if (spec.n < 0 || spec.out_degrees.size() != static_cast<std::size_t>(spec.n)) {
    fail(ErrorCode::BadParameters, "round spec needs one out-degree per vertex");
  }
  GraphBuilder b(spec.n);
  for (int i = 0; i < spec.n; ++i) {
    const int d = spec.out_degrees[static_cast<std::size_t>(i)];
    if (d < 0 || d >= spec.n) fail(ErrorCode::BadParameters, "out-degree window out of range");
    for (int s = 1; s <= d; ++s) b.add_edge(i, (i + s) % spec.n);
  }
  return b.build();
}

OrientedGraph round_tournament(int n) {
  if (n < 1) fail(ErrorCode::BadParameters, "round tournament needs n >= 1");
  RoundSpec spec{n, std::vector<int>(static_cast<std::size_t>(n))};
  for (int i = 0; i < n; ++i) {
    spec.out_degrees[static_cast<std::size_t>(i)] = n % 2 == 1 ? (n - 1) / 2 : (i < n / 2 ? n / 2 : n / 2 - 1);
  }
  return round_digraph(spec);
}

Construction c3_blowup_of(const OrientedGraph& t1, const OrientedGraph& t2, const OrientedGraph& t3) {
  const OrientedGraph* ts[3] = {&t1, &t2, &t3};
  int offset[4] = {0, t1.order(), t1.order() + t2.order(), t1.order() + t2.order() + t3.order()};
  const int n = offset[3];
  std::vector<Edge> es;
  std::vector<int> labels(static_cast<std::size_t>(n));
  for (int p = 0; p < 3; ++p) {
    for (const Edge& e : ts[p]->edges()) es.push_back({e.from + offset[p], e.to + offset[p]});
    const int q = (p + 1) % 3;
    for (int u = offset[p]; u < offset[p + 1]; ++u) {
      labels[static_cast<std::size_t>(u)] = p;
      for (int v = offset[q]; v < offset[q + 1]; ++v) es.push_back({u, v});
    }
  }
  return {OrientedGraph::build(n, es), Tripartition::from_labels(labels)};
}

namespace {

Construction blow_up_with_parts(const Construction& base, int t) {
  if (t < 1) fail(ErrorCode::BadParameters, "blow-up multiplicity must be >= 1");
  std::vector<int> labels;
  labels.reserve(static_cast<std::size_t>(base.graph.order() * t));
  for (int v = 0; v < base.graph.order(); ++v)
    for (int i = 0; i < t; ++i) labels.push_back(base.parts.part_of(v));
  return {blow_up(base.graph, t), Tripartition::from_labels(labels)};
}

}  // namespace

Construction f_graph(int t) {
  const OrientedGraph c3 = directed_cycle(3).graph;
  return blow_up_with_parts(c3_blowup_of(c3, c3, c3), t);
}

Construction square_excluder(int t) {
  // Out-lists of x1..x8, 1-indexed.
  static constexpr int kOut[8][3] = {{2, 3, 4}, {3, 5, 6}, {4, 6, 7}, {2, 5, 7},
                                     {1, 6, 8}, {1, 7, 8}, {1, 5, 8}, {2, 3, 4}};
  GraphBuilder b(8);
  for (int u = 0; u < 8; ++u)
    for (int v : kOut[u]) b.add_edge(u, v - 1);
  const std::vector<int> labels = {2, 0, 0, 0, 1, 1, 1, 2};
  return blow_up_with_parts({b.build(), Tripartition::from_labels(labels)}, t);
}

OrientedGraph turanable_noncontainment(int a, int b, int c) {
  if (c < 2) fail(ErrorCode::PartTooSmall, "the C class needs two vertices to carry a path");
  const Pattern d = d_abc(a, b, c);
  std::vector<Edge> es = d.graph.edges();
  const int source = a + b;          // first vertex of the transitive C class
  const int sink = a + b + c - 1;    // last vertex of the transitive C class
  const int w = a + b + c;
  es.push_back({sink, w});
  es.push_back({w, source});
  return OrientedGraph::build(a + b + c + 1, es);
}

namespace {

void check_abc_parameters(int a, int b, int c, int k) {
  if (!(2 <= a && a <= b && b <= c) || c < 3 || k < 1) {
    fail(ErrorCode::BadParameters, "construction requires 2 <= a <= b <= c, c >= 3 and k >= 1");
  }
}

}  // namespace

Construction no_factor_tournament_abc_unmatched(int a, int b, int c, int k) {
  check_abc_parameters(a, b, c, k);
  const int hk = (a + b + c) * k;
  return c3_blowup_of(round_tournament(2 * hk + 1), round_tournament(2 * hk - 1), round_tournament(2 * hk));
}

Construction no_factor_tournament_abc(int a, int b, int c, int k) {
  Construction base = no_factor_tournament_abc_unmatched(a, b, c, k);
  const int hk = (a + b + c) * k;
  const int third = (2 * hk + 1) + (2 * hk - 1);  // first vertex of V3
  // V3+ is the first half of the even round tournament (out-degree hk there);
  // S is the first hk vertices of V1. Pair them up in order and flip.
  std::vector<Edge> es = base.graph.edges();
  for (Edge& e : es) {
    const int i = e.from - third;
    if (i >= 0 && i < hk && e.to == i) std::swap(e.from, e.to);
  }
  return {OrientedGraph::build(base.graph.order(), es), base.parts};
}

Construction no_factor_tournament_1bc(int b, int c, int k) {
  if (!(1 <= b && b <= c) || k < 1) fail(ErrorCode::BadParameters, "construction requires 1 <= b <= c and k >= 1");
  const int h = 1 + b + c;
  if (h % 3 == 0) fail(ErrorCode::DivisibleByThree, "1+b+c must not be divisible by 3");
  const int r1 = (h + 2) / 3;
  const int r2 = h / 3;
  const int r3 = h - r1 - r2;
  const int hk = h * k;
  return c3_blowup_of(round_tournament(hk + r1), round_tournament(hk + r2), round_tournament(hk + r3));
}

Construction sharpness_graph(int s, int t) {
  if (s < 1 || t < 1) fail(ErrorCode::BadParameters, "s and t must be >= 1");
  const int base = 3 * s * t;
  return c3_blowup_of(round_tournament(base + s - 1), round_tournament(base + 2 * s - 1),
                      round_tournament(base + 3 * s - 1));
}

}  // namespace dtile
