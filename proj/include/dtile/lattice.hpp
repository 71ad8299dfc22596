#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "dtile/digraph.hpp"
#include "dtile/patterns.hpp"
#include "dtile/search.hpp"

namespace dtile {

using IndexVector = std::vector<std::int64_t>;

/// coords[i] = |s & partition[i]|. Throws NotAPartition.
IndexVector index_vector(const VertexSet& s, std::span<const VertexSet> partition);

struct RobustSet {
  /// Copy count per index vector (all vectors seen, before thresholding).
  std::map<IndexVector, std::uint64_t> census;
  /// Vectors attained by more than `threshold` copies.
  std::vector<IndexVector> vectors;
  std::uint64_t threshold = 0;
  /// False when copy enumeration ran out of budget; the census is then partial.
  bool complete = true;
};

RobustSet robust_vectors(const OrientedGraph& g, const Pattern& pattern, std::span<const VertexSet> partition,
                         std::uint64_t threshold, SearchBudget budget = {});

/// Integer row basis in echelon (Hermite) form with positive pivots.
class LatticeBasis {
 public:
  LatticeBasis() = default;
  LatticeBasis(int dim, std::vector<IndexVector> generators);

  int dim() const { return dim_; }
  const std::vector<IndexVector>& rows() const { return rows_; }
  bool contains(IndexVector v) const;

 private:
  int dim_ = 0;
  std::vector<IndexVector> rows_;
  std::vector<int> pivots_;
};

inline LatticeBasis lattice_basis(std::span<const IndexVector> vectors, int dim) {
  return LatticeBasis(dim, std::vector<IndexVector>(vectors.begin(), vectors.end()));
}
inline bool contains(const LatticeBasis& basis, const IndexVector& v) { return basis.contains(v); }

/// Members v1, v2 with v1 - v2 = e_i - e_j.
struct Transferral {
  int i = 0;
  int j = 0;
  IndexVector v1;
  IndexVector v2;
};
std::optional<Transferral> find_2_transferral(const RobustSet& robust);

/// A yes/no answer that may be cut short by the budget.
struct Decision {
  bool value = false;
  bool complete = true;
};

struct LinkingCount {
  std::uint64_t count = 0;
  bool complete = true;
};

/// Number of (ht-1)-sets S avoiding x and y with pattern factors in both
/// G[S + x] and G[S + y]. Throws SameVertex, BadParameters when t < 1.
LinkingCount linking_count(const OrientedGraph& g, const Pattern& pattern, int x, int y, int t,
                           SearchBudget budget = {});

Decision is_reachable(const OrientedGraph& g, const Pattern& pattern, int x, int y, int t, std::uint64_t threshold,
                      SearchBudget budget = {});
Decision is_closed(const OrientedGraph& g, const Pattern& pattern, const VertexSet& u, int t, std::uint64_t threshold,
                   SearchBudget budget = {});

/// Symmetric matrix of linking counts over all pairs (diagonal 0), computed
/// in parallel.
struct ReachabilityMatrix {
  std::vector<std::vector<std::uint64_t>> counts;
  bool complete = true;
};
ReachabilityMatrix reachability_matrix(const OrientedGraph& g, const Pattern& pattern, int t,
                                       SearchBudget budget = {});

/// |a_s| = t|pattern| and both G[a_s] and G[a_s + s] have pattern factors.
/// Throws Overlap when the sets meet, BadSize unless |pattern| divides |s|.
Decision is_absorber(const OrientedGraph& g, const Pattern& pattern, const VertexSet& a_s, const VertexSet& s, int t,
                     SearchBudget budget = {});

}  // namespace dtile
