#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dtile/digraph.hpp"
#include "dtile/patterns.hpp"

namespace dtile {

/// map[p] is the host vertex assigned to pattern vertex p.
using Embedding = std::vector<int>;

struct SearchBudget {
  std::uint64_t node_limit = 10'000'000;
  std::uint64_t copy_limit = 10'000'000;
};

enum class SearchStatus { Found, NotFound, Exhausted };
const char* status_name(SearchStatus s);

struct EmbedResult {
  SearchStatus status = SearchStatus::NotFound;
  Embedding map;
  std::uint64_t nodes = 0;
};

/// Backtracking embedding. Pattern vertices are placed in a fixed
/// connectivity order and candidates are tried in ascending host order, so the
/// witness is deterministic. `constraints`, when given, holds one candidate
/// set per pattern vertex.
EmbedResult embed(const OrientedGraph& pattern, const OrientedGraph& host,
                  const std::vector<VertexSet>* constraints = nullptr, SearchBudget budget = {});
inline EmbedResult embed(const Pattern& pattern, const OrientedGraph& host,
                         const std::vector<VertexSet>* constraints = nullptr, SearchBudget budget = {}) {
  return embed(pattern.graph, host, constraints, budget);
}

/// Injective and direction-preserving.
bool is_embedding(const OrientedGraph& pattern, const OrientedGraph& host, const Embedding& map);

// Tiles ---------------------------------------------------------------------

enum class TileKind { Type, Cross, Mixed };

/// Type(i): every vertex in part i. Cross(i): classes A, B, C in parts i, i+1,
/// i+2. Parts are 0-based here.
struct TileType {
  TileKind kind = TileKind::Mixed;
  int part = -1;
  friend bool operator==(const TileType&, const TileType&) = default;
};
std::string to_string(const TileType& t);

struct TileRecord {
  VertexSet vertices;
  Embedding map;
  std::optional<TileType> type;
};

/// Classification of a copy on `vertices`. For Cross the returned map is a
/// witness embedding whose role classes land in the right parts.
TileType classify_tile(const Pattern& pattern, const OrientedGraph& host, const Tripartition& parts,
                       const VertexSet& vertices, Embedding* cross_witness = nullptr);

struct CopyList {
  std::vector<TileRecord> copies;  // sorted by vertex set
  bool complete = true;
  std::uint64_t nodes = 0;
};

/// One record per distinct vertex set carrying a copy.
CopyList enumerate_copies(const Pattern& pattern, const OrientedGraph& host, const Tripartition* parts = nullptr,
                          SearchBudget budget = {});

/// Copies found by randomised depth-first search; sample i depends only on
/// (seed, i). Samples whose search runs out of budget are dropped and counted.
struct SampleResult {
  std::vector<TileRecord> samples;
  std::size_t failed = 0;
};
SampleResult sample_copies(const Pattern& pattern, const OrientedGraph& host, const Tripartition* parts,
                           std::size_t count, std::uint64_t seed, SearchBudget per_sample = {100000, 1});

// Specialised searches ------------------------------------------------------

/// Classical recursion: take a vertex of maximum out-degree in the current set
/// (lowest index on ties) and recurse into its out-neighbourhood.
/// Throws NotTournament; TooSmall when n < 2^(k-1).
Embedding find_tt(const OrientedGraph& tournament, int k);

struct SquarePathResult {
  int order = 0;
  std::vector<int> witness;  // z_1, ..., z_order
  bool exact = true;         // false when the budget ran out
  std::uint64_t nodes = 0;
};
/// Largest s such that some z_1..z_s has z_i -> z_{i+1} and z_i -> z_{i+2}.
SquarePathResult longest_square_path_order(const OrientedGraph& g, SearchBudget budget = {});

/// Decides whether the k-th power of the l-vertex cycle is a subgraph.
/// Throws BadParameters when l < 2k + 1.
EmbedResult contains_cycle_power(const OrientedGraph& g, int l, int k, SearchBudget budget = {});

/// Ordered vertex-distinct triples (v1,v2,v3) in a x b x c with v1->v2->v3->v1.
std::uint64_t cyc_count(const OrientedGraph& g, const VertexSet& a, const VertexSet& b, const VertexSet& c);

/// Vertex-distinct quadruples in a x b x c x d with v1->v2->v3->v1 and
/// v3->v4->v2 (labelled subgraph copies of K4-).
std::uint64_t k4m_count(const OrientedGraph& g, const VertexSet& a, const VertexSet& b, const VertexSet& c,
                        const VertexSet& d);

enum class Sign { Plus, Minus };
/// Plus: {x not in a : d-(x, a) >= |a| - slack}; Minus uses d+.
VertexSet strong_neighborhood(const OrientedGraph& g, const VertexSet& a, int slack, Sign sign);

}  // namespace dtile
