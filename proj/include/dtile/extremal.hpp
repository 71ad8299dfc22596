#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "dtile/digraph.hpp"
#include "dtile/patterns.hpp"
#include "dtile/search.hpp"
#include "dtile/tiling.hpp"

namespace dtile {

/// Explicit constants for the O(gamma n) and O(gamma n^2) slacks.
struct ExtremalParams {
  double gamma = 0.0;
  double c1 = 1.0;  // part sizes: | |V_i| - n/3 | <= c1 gamma n
  double c2 = 1.0;  // backward edges: e(V_{i+1}, V_i) <= c2 gamma n^2
  double c3 = 1.0;  // degrees: d+(v, V_{i+1}), d-(v, V_{i-1}) >= n/6 - c3 gamma n
};
/// Throws BadParameters unless gamma >= 0 and every constant is > 0.
void validate(const ExtremalParams& p);

struct PartDiagnostics {
  int size = 0;
  double size_deviation = 0;      // | |V_i| - n/3 |
  std::uint64_t backward_edges = 0;  // e(V_{i+1}, V_i)
  bool size_ok = true;
  bool edges_ok = true;
};

struct ExtremalReport {
  bool extremal = false;
  double size_slack = 0;
  double edge_slack = 0;
  std::array<PartDiagnostics, 3> parts{};
  /// edge_matrix[i][j] = e(V_i, V_j).
  std::array<std::array<std::uint64_t, 3>, 3> edge_matrix{};
};

ExtremalReport is_extremal(const OrientedGraph& g, const Tripartition& parts, const ExtremalParams& params);

struct SuperextremalReport {
  bool superextremal = false;
  ExtremalReport extremal;
  double degree_threshold = 0;
  std::vector<int> offending;  // vertices failing the degree condition
};

SuperextremalReport is_superextremal(const OrientedGraph& g, const Tripartition& parts, const ExtremalParams& params);

/// v in V_i is good when d+(v, V_{i+1}) >= |V_{i+1}| - slack and
/// d-(v, V_{i-1}) >= |V_{i-1}| - slack.
VertexSet good_vertices(const OrientedGraph& g, const Tripartition& parts, int slack);

struct TransferWitness {
  VertexSet set;
  Tiling factor;  // a pattern factor of G[set]
};

struct TransferSearch {
  std::optional<TransferWitness> witness;
  bool complete = true;
};

/// A set S avoiding `excluded` with |S| <= 3h (h = 1+b+c), a pattern factor of
/// G[S], |S & V_i| = 1 and |S & V_j| = -1 modulo h. Parts i, j are 0-based.
/// Throws BadPattern unless the pattern is a D(1,b,c) with roles.
TransferSearch find_transfer_witness(const OrientedGraph& g, const Pattern& pattern, const Tripartition& parts, int i,
                                     int j, const VertexSet& excluded, SearchBudget budget = {});

struct TripartitionSearch {
  Tripartition parts;
  std::uint64_t backward = 0;  // sum_i e(V_{i+1}, V_i)
  int best_restart = 0;
  /// Objective after every accepted move of the winning restart, starting with
  /// the initial value.
  std::vector<std::uint64_t> trail;
  /// Vertices moved by the final reassignment pass.
  std::vector<int> reassigned;
};

std::uint64_t backward_edges(const OrientedGraph& g, const Tripartition& parts);

/// Local search over near-balanced tripartitions (each part within
/// floor(n/3) - slack .. ceil(n/3) + slack, slack = max(1, n/12)), best of
/// `restarts` seeded random starts. Moves: single-vertex relocations, then
/// swaps, steepest descent. A final pass moves each vertex to the part
/// maximising min(d+(v, V_{i+1}), d-(v, V_{i-1})) when that does not raise the
/// objective. Throws TooSmall when n < 3.
TripartitionSearch best_tripartition(const OrientedGraph& g, int restarts, std::uint64_t seed);

}  // namespace dtile
