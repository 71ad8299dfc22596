#pragma once

#include <vector>

#include "dtile/digraph.hpp"

namespace dtile {

/// A generated graph together with its natural three-part frame.
struct Construction {
  OrientedGraph graph;
  Tripartition parts;
};

/// Round digraph: N+(v_i) = {v_{i+1}, ..., v_{i+d+(v_i)}} (indices mod n).
struct RoundSpec {
  int n = 0;
  std::vector<int> out_degrees;
};

/// Throws TwoCycle if two windows overlap in opposite directions.
OrientedGraph round_digraph(const RoundSpec& spec);

/// Odd n: regular. Even n: the first n/2 vertices get out-degree n/2, the
/// rest n/2 - 1.
OrientedGraph round_tournament(int n);

/// Disjoint copies of the three graphs, joined completely V1 -> V2 -> V3 -> V1.
Construction c3_blowup_of(const OrientedGraph& t1, const OrientedGraph& t2, const OrientedGraph& t3);

/// Three directed triangles joined cyclically, blown up by t: 4t-regular on 9t vertices.
Construction f_graph(int t);

/// The 8-vertex 3-regular graph with no square of a cycle, blown up by t.
/// Parts: {x2,x3,x4}, {x5,x6,x7}, {x1,x8} (0-indexed 1..3, 4..6, {0,7} before blow-up).
Construction square_excluder(int t);

/// D(a,b,c) with a new vertex w closing the Hamiltonian path of the C class
/// into a cycle (sink -> w -> source). Vertex w is a+b+c. Throws PartTooSmall if c < 2.
OrientedGraph turanable_noncontainment(int a, int b, int c);

/// Semi-regular tournament on 6hk vertices (h = a+b+c) from round tournaments
/// on 2hk+1, 2hk-1, 2hk vertices with a matching between the long-window half
/// of the third part and the first hk vertices of the first part reversed.
/// Requires 2 <= a <= b <= c, c >= 3, k >= 1 (BadParameters).
Construction no_factor_tournament_abc(int a, int b, int c, int k);
/// Variant without the matching reversal (the plain blow-up); used to show the
/// reversal is what restores semi-regularity.
Construction no_factor_tournament_abc_unmatched(int a, int b, int c, int k);

/// Semi-regular tournament on (3k+1)h vertices (h = 1+b+c) from round
/// tournaments on hk + ceil(h/3), hk + floor(h/3), hk + rest vertices.
/// Throws DivisibleByThree if 3 | h, BadParameters unless 1 <= b <= c, k >= 1.
Construction no_factor_tournament_1bc(int b, int c, int k);

/// C3 blow-up of round tournaments on 3st+s-1, 3st+2s-1, 3st+3s-1 vertices.
Construction sharpness_graph(int s, int t);

}  // namespace dtile
