#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dtile/congruence.hpp"
#include "dtile/digraph.hpp"
#include "dtile/patterns.hpp"
#include "dtile/search.hpp"

namespace dtile {

struct Tiling {
  std::vector<TileRecord> tiles;  // sorted by vertex set
  VertexSet covered;
};

/// Tiles pairwise disjoint, each map a valid embedding onto its vertex set,
/// covered equal to the union.
bool verify_tiling(const OrientedGraph& g, const Pattern& pattern, const Tiling& tiling);

enum class Optimality { Proven, BudgetBound };

struct MaxTilingResult {
  Tiling tiling;
  Optimality optimality = Optimality::Proven;
  std::uint64_t nodes = 0;
};

/// Exact maximum tiling by branching on the lowest uncovered vertex. When the
/// budget runs out the best tiling seen is returned as BudgetBound.
/// Tiles are type-tagged when `parts` is given.
MaxTilingResult max_tiling(const OrientedGraph& g, const Pattern& pattern, SearchBudget budget = {},
                           const Tripartition* parts = nullptr);

enum class FactorStatus { Yes, No, Exhausted };
const char* factor_status_name(FactorStatus s);

struct FactorResult {
  FactorStatus status = FactorStatus::No;
  Tiling tiling;  // the factor when status is Yes
  std::uint64_t nodes = 0;
};

FactorResult has_factor(const OrientedGraph& g, const Pattern& pattern, SearchBudget budget = {},
                        const Tripartition* parts = nullptr);

/// Required number of tiles of each type; index i is part i (0-based).
struct TypeDemand {
  std::array<int, 3> type{};
  std::array<int, 3> cross{};
};

/// A disjoint family with exactly the demanded number of tiles of each type.
/// Throws BadDemand for negative counts, a Cross demand on a pattern without
/// roles, or a demand using more than n vertices.
FactorResult typed_tiling(const OrientedGraph& g, const Pattern& pattern, const Tripartition& parts,
                          const TypeDemand& demand, SearchBudget budget = {});

enum class ObstructionVerdict { Infeasible, Feasible, Inconclusive };
const char* verdict_name(ObstructionVerdict v);

struct ObstructionReport {
  // x, y, z: Cross tiles of types (1,2,3), (2,3,1), (3,1,2); t: Type(i) tiles.
  std::int64_t x = 0, y = 0, z = 0;
  std::array<std::int64_t, 3> t{};
  std::int64_t mixed = 0;
  std::array<std::int64_t, 3> part_sizes{};
  std::array<std::int64_t, 3> residues{};
  /// Vertices of each part covered by the tiling, as recorded and as implied
  /// by the type counts; `consistent` when they agree.
  std::array<std::int64_t, 3> covered{};
  std::array<std::int64_t, 3> covered_by_counts{};
  bool consistent = true;
  /// Least solution of the residue system for a factor, if any.
  std::optional<Triple> congruence_solution;
  ObstructionVerdict verdict = ObstructionVerdict::Inconclusive;
  std::string note;
};

/// Classifies every tile and checks the per-part residue bookkeeping a factor
/// would have to satisfy. Throws BadParameters when the tiling is invalid.
ObstructionReport obstruction_report(const OrientedGraph& g, const Pattern& pattern, const Tripartition& parts,
                                     const Tiling& tiling);

}  // namespace dtile
