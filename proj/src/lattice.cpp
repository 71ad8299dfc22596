#include "dtile/lattice.hpp"

#include <algorithm>
#include <cstdlib>

#include "dtile/error.hpp"
#include "dtile/parallel.hpp"
#include "dtile/tiling.hpp"

namespace dtile {

IndexVector index_vector(const VertexSet& s, std::span<const VertexSet> partition) {
  if (partition.empty()) fail(ErrorCode::NotAPartition, "partition has no parts");
  check_partition(partition.front().universe(), partition);
  if (s.universe() != partition.front().universe()) fail(ErrorCode::OutOfRange, "set is over a different range");
  IndexVector v;
  v.reserve(partition.size());
  for (const auto& p : partition) v.push_back(s.count_and(p));
  return v;
}

RobustSet robust_vectors(const OrientedGraph& g, const Pattern& pattern, std::span<const VertexSet> partition,
                         std::uint64_t threshold, SearchBudget budget) {
  if (partition.empty() || partition.front().universe() != g.order()) {
    fail(ErrorCode::NotAPartition, "partition must cover the graph");
  }
  check_partition(g.order(), partition);
  RobustSet r;
  r.threshold = threshold;
  const CopyList copies = enumerate_copies(pattern, g, nullptr, budget);
  r.complete = copies.complete;
  for (const auto& c : copies.copies) ++r.census[index_vector(c.vertices, partition)];
  for (const auto& [v, count] : r.census)
    if (count > threshold) r.vectors.push_back(v);
  return r;
}

LatticeBasis::LatticeBasis(int dim, std::vector<IndexVector> generators) : dim_(dim) {
  for (const auto& v : generators)
    if (static_cast<int>(v.size()) != dim) fail(ErrorCode::BadParameters, "generator has the wrong dimension");
  std::vector<IndexVector> rows = std::move(generators);
  std::size_t r = 0;
  for (int c = 0; c < dim && r < rows.size(); ++c) {
    const auto col = static_cast<std::size_t>(c);
    // Euclid on column c among rows r.. until a single nonzero entry remains.
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t i = r; i < rows.size(); ++i)
        if (rows[i][col] != 0 && (best == rows.size() || std::llabs(rows[i][col]) < std::llabs(rows[best][col])))
          best = i;
      if (best == rows.size()) break;
      std::swap(rows[r], rows[best]);
      bool reduced = false;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        const std::int64_t q = rows[i][col] / rows[r][col];
        for (int k = 0; k < dim; ++k) rows[i][static_cast<std::size_t>(k)] -= q * rows[r][static_cast<std::size_t>(k)];
        reduced = true;
      }
      bool others_zero = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) others_zero = others_zero && rows[i][col] == 0;
      if (others_zero) {
        if (rows[r][col] < 0)
          for (auto& x : rows[r]) x = -x;
        pivots_.push_back(c);
        ++r;
        break;
      }
      if (!reduced) break;
    }
  }
  rows.resize(r);
  // Reduce entries above each pivot into [0, pivot).
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto pc = static_cast<std::size_t>(pivots_[i]);
    for (std::size_t j = 0; j < i; ++j) {
      std::int64_t q = rows[j][pc] / rows[i][pc];
      if (rows[j][pc] - q * rows[i][pc] < 0) --q;
      for (int k = 0; k < dim; ++k) rows[j][static_cast<std::size_t>(k)] -= q * rows[i][static_cast<std::size_t>(k)];
    }
  }
  rows_ = std::move(rows);
}

bool LatticeBasis::contains(IndexVector v) const {
  if (static_cast<int>(v.size()) != dim_) return false;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const auto pc = static_cast<std::size_t>(pivots_[i]);
    if (v[pc] % rows_[i][pc] != 0) return false;
    const std::int64_t q = v[pc] / rows_[i][pc];
    for (int k = 0; k < dim_; ++k) v[static_cast<std::size_t>(k)] -= q * rows_[i][static_cast<std::size_t>(k)];
  }
  return std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; });
}

std::optional<Transferral> find_2_transferral(const RobustSet& robust) {
  for (const auto& v1 : robust.vectors) {
    for (const auto& v2 : robust.vectors) {
      if (v1.size() != v2.size()) continue;
      int plus = -1, minus = -1;
      bool ok = true;
      for (std::size_t k = 0; k < v1.size() && ok; ++k) {
        const std::int64_t d = v1[k] - v2[k];
        if (d == 0) continue;
        if (d == 1 && plus < 0) {
          plus = static_cast<int>(k);
        } else if (d == -1 && minus < 0) {
          minus = static_cast<int>(k);
        } else {
          ok = false;
        }
      }
      if (ok && plus >= 0 && minus >= 0) return Transferral{plus, minus, v1, v2};
    }
  }
  return std::nullopt;
}

namespace {

/// Does G[s] have a pattern factor? `complete` is cleared on budget exhaustion.
bool factor_on(const OrientedGraph& g, const Pattern& pattern, const VertexSet& s, SearchBudget budget,
               bool& complete) {
  const auto sub = induced(g, s);
  const auto r = has_factor(sub.graph, pattern, budget);
  if (r.status == FactorStatus::Exhausted) complete = false;
  return r.status == FactorStatus::Yes;
}

}  // namespace

LinkingCount linking_count(const OrientedGraph& g, const Pattern& pattern, int x, int y, int t, SearchBudget budget) {
  if (x == y) fail(ErrorCode::SameVertex, "x and y must differ");
  if (x < 0 || y < 0 || x >= g.order() || y >= g.order()) fail(ErrorCode::OutOfRange, "vertex out of range");
  if (t < 1) fail(ErrorCode::BadParameters, "t must be >= 1");
  LinkingCount out;
  const int size = pattern.order() * t - 1;
  std::vector<int> pool;
  for (int v = 0; v < g.order(); ++v)
    if (v != x && v != y) pool.push_back(v);
  if (size > static_cast<int>(pool.size())) return out;
  // Walk all size-subsets of pool in lexicographic order.
  std::vector<int> idx(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) idx[static_cast<std::size_t>(i)] = i;
  const int m = static_cast<int>(pool.size());
  std::uint64_t visited = 0;
  while (true) {
    if (++visited > budget.copy_limit) {
      out.complete = false;
      break;
    }
    VertexSet s(g.order());
    for (int i : idx) s.set(pool[static_cast<std::size_t>(i)]);
    VertexSet sx = s, sy = s;
    sx.set(x);
    sy.set(y);
    if (factor_on(g, pattern, sx, budget, out.complete) && factor_on(g, pattern, sy, budget, out.complete)) ++out.count;
    int i = size - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - size + i) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < size; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

Decision is_reachable(const OrientedGraph& g, const Pattern& pattern, int x, int y, int t, std::uint64_t threshold,
                      SearchBudget budget) {
  if (threshold == 0) return {true, true};
  const LinkingCount c = linking_count(g, pattern, x, y, t, budget);
  return {c.count >= threshold, c.complete || c.count >= threshold};
}

ReachabilityMatrix reachability_matrix(const OrientedGraph& g, const Pattern& pattern, int t, SearchBudget budget) {
  const int n = g.order();
  ReachabilityMatrix m;
  m.counts.assign(static_cast<std::size_t>(n), std::vector<std::uint64_t>(static_cast<std::size_t>(n), 0));
  std::vector<std::pair<int, int>> pairs;
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) pairs.emplace_back(x, y);
  std::vector<LinkingCount> results(pairs.size());
  parallel_for(pairs.size(), [&](std::size_t i) {
    results[i] = linking_count(g, pattern, pairs[i].first, pairs[i].second, t, budget);
  });
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto [x, y] = pairs[i];
    m.counts[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = results[i].count;
    m.counts[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)] = results[i].count;
    m.complete = m.complete && results[i].complete;
  }
  return m;
}

Decision is_closed(const OrientedGraph& g, const Pattern& pattern, const VertexSet& u, int t, std::uint64_t threshold,
                   SearchBudget budget) {
  const auto members = u.to_vector();
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j) pairs.emplace_back(members[i], members[j]);
  std::vector<Decision> results(pairs.size());
  parallel_for(pairs.size(), [&](std::size_t i) {
    results[i] = is_reachable(g, pattern, pairs[i].first, pairs[i].second, t, threshold, budget);
  });
  Decision d{true, true};
  for (const auto& r : results) {
    if (r.complete && !r.value) return {false, true};
    if (!r.complete) d.complete = false;
  }
  return d;
}

Decision is_absorber(const OrientedGraph& g, const Pattern& pattern, const VertexSet& a_s, const VertexSet& s, int t,
                     SearchBudget budget) {
  if (a_s.intersects(s)) fail(ErrorCode::Overlap, "absorber and absorbed set must be disjoint");
  if (s.count() % pattern.order() != 0) fail(ErrorCode::BadSize, "absorbed set size must be a multiple of |pattern|");
  if (a_s.count() != t * pattern.order()) return {false, true};
  Decision d;
  d.value = factor_on(g, pattern, a_s, budget, d.complete) && factor_on(g, pattern, a_s | s, budget, d.complete);
  return d;
}

}  // namespace dtile
