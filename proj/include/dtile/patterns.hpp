#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "dtile/digraph.hpp"

namespace dtile {

/// A small labelled oriented graph to search for or tile with.
struct Pattern {
  enum class Shape { General, Cycle, Path };

  OrientedGraph graph;
  /// Per-vertex A/B/C labels; present for the triangle blow-ups D(a,b,c).
  std::optional<std::vector<Role>> roles;
  std::string name;
  Shape shape = Shape::General;

  int order() const { return graph.order(); }
  /// Sizes of the A, B and C classes; (0,0,0) without roles.
  std::array<int, 3> role_sizes() const;
};

Pattern transitive_tournament(int k);
/// Both are parameterised by vertex count.
Pattern directed_cycle(int l);
Pattern directed_path(int l);
/// Adds x -> y whenever y is 1..k steps after x along the cycle or path.
/// Throws NotOriented for a cycle with fewer than 2k + 1 vertices.
Pattern power(const Pattern& base, int k);
/// Classes A (a vertices), B, C laid out consecutively; each class is a
/// transitive tournament and A -> B -> C -> A completely.
Pattern d_abc(int a, int b, int c);
Pattern k4_minus();

/// Sorted copy of (a, b, c).
std::array<int, 3> normalized(int a, int b, int c);

/// `dabc:a,b,c | tt:k | cyc:l | path:l | cycpow:l,k | pathpow:l,k | k4m`.
/// Throws BadPattern on malformed input.
Pattern parse_pattern(const std::string& spec);

}  // namespace dtile
