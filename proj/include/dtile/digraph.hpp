#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dtile/vertex_set.hpp"

namespace dtile {

struct Edge {
  int from = 0;
  int to = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable digraph with no loops and no 2-cycles.
///
/// Adjacency is stored twice (out and in) as bit-sets so that neighbourhood
/// intersections are word-parallel. Instances are frozen after `build` and are
/// safe to share between threads.
class OrientedGraph {
 public:
  OrientedGraph() = default;

  /// Throws LoopEdge, TwoCycle or OutOfRange. Duplicate edges collapse.
  static OrientedGraph build(int n, std::span<const Edge> edges);

  int order() const { return n_; }
  std::size_t edge_count() const { return m_; }

  bool has_edge(int u, int v) const { return out_[static_cast<std::size_t>(u)].test(v); }
  bool adjacent(int u, int v) const { return has_edge(u, v) || has_edge(v, u); }

  const VertexSet& out(int v) const { return out_[static_cast<std::size_t>(v)]; }
  const VertexSet& in(int v) const { return in_[static_cast<std::size_t>(v)]; }
  int out_degree(int v) const { return out(v).count(); }
  int in_degree(int v) const { return in(v).count(); }

  VertexSet all() const { return VertexSet::full(n_); }
  VertexSet empty_set() const { return VertexSet(n_); }

  /// Edges sorted lexicographically by (from, to).
  std::vector<Edge> edges() const;

  friend bool operator==(const OrientedGraph& a, const OrientedGraph& b) {
    return a.n_ == b.n_ && a.out_ == b.out_;
  }

 private:
  int n_ = 0;
  std::size_t m_ = 0;
  std::vector<VertexSet> out_;
  std::vector<VertexSet> in_;
};

/// Single-owner accumulator for edges; `build` validates and freezes.
class GraphBuilder {
 public:
  explicit GraphBuilder(int n) : n_(n) {}
  GraphBuilder& add_edge(int u, int v) {
    edges_.push_back({u, v});
    return *this;
  }
  int order() const { return n_; }
  OrientedGraph build() const { return OrientedGraph::build(n_, edges_); }

 private:
  int n_;
  std::vector<Edge> edges_;
};

struct DegreeProfile {
  std::vector<int> out;
  std::vector<int> in;
  int min_semi_degree = 0;
  int min_total_degree = 0;
};

DegreeProfile degree_profile(const OrientedGraph& g);
bool is_tournament(const OrientedGraph& g);
bool is_semiregular_tournament(const OrientedGraph& g);

OrientedGraph reverse(const OrientedGraph& g);

struct InducedGraph {
  OrientedGraph graph;
  /// to_host[i] is the vertex of the host graph that became vertex i.
  std::vector<int> to_host;
};

/// Throws OutOfRange when `s` is over a different vertex range.
InducedGraph induced(const OrientedGraph& g, const VertexSet& s);

/// Vertex u is replaced by the class {offset(u), ..., offset(u) + size(u) - 1},
/// with classes laid out in vertex order.
OrientedGraph blow_up(const OrientedGraph& g, int t);
OrientedGraph blow_up(const OrientedGraph& g, std::span<const int> sizes);

struct PairStats {
  int out_out = 0;  // |N+(u) & N+(v) & A|
  int out_in = 0;   // |N+(u) & N-(v) & A|
  int in_out = 0;   // |N-(u) & N+(v) & A|
  int in_in = 0;    // |N-(u) & N-(v) & A|
};

/// Throws SameVertex when u == v.
PairStats pair_stats(const OrientedGraph& g, int u, int v, const VertexSet& a);

/// Number of edges u -> v with u in a and v in b (a and b may overlap).
std::size_t cross_edges(const OrientedGraph& g, const VertexSet& a, const VertexSet& b);

/// Ordered partition (V1, V2, V3); part indices are taken modulo 3.
class Tripartition {
 public:
  Tripartition() = default;
  /// Throws NotAPartition unless the parts are disjoint and cover [n].
  Tripartition(int n, std::array<VertexSet, 3> parts);
  static Tripartition from_labels(std::span<const int> part_of);

  int order() const { return n_; }
  const VertexSet& part(int i) const { return parts_[static_cast<std::size_t>(((i % 3) + 3) % 3)]; }
  const std::array<VertexSet, 3>& parts() const { return parts_; }
  int part_of(int v) const { return labels_[static_cast<std::size_t>(v)]; }
  const std::vector<int>& labels() const { return labels_; }
  std::array<int, 3> sizes() const;

  friend bool operator==(const Tripartition& a, const Tripartition& b) { return a.labels_ == b.labels_; }

 private:
  int n_ = 0;
  std::array<VertexSet, 3> parts_;
  std::vector<int> labels_;
};

/// Throws NotAPartition unless the parts are pairwise disjoint and cover [n].
void check_partition(int n, std::span<const VertexSet> parts);

// Text formats -------------------------------------------------------------

enum class Role { A, B, C };

struct GraphDocument {
  OrientedGraph graph;
  std::optional<std::vector<Role>> roles;
  std::optional<Tripartition> parts;
};

/// Edge-list text: first non-comment line is n, then one `u v` pair per line.
/// `#` starts a comment line; `# roles: A B C ...` and `# parts: 0 1 2 ...`
/// comment lines are recognised. Throws Parse.
GraphDocument parse_edge_list(const std::string& text);
std::string write_edge_list(const OrientedGraph& g, const std::vector<Role>* roles = nullptr,
                            const Tripartition* parts = nullptr);
std::string write_dot(const OrientedGraph& g, const Tripartition* parts = nullptr);

GraphDocument read_edge_list_file(const std::string& path);

}  // namespace dtile
