// Backtracking core shared by the search and tiling modules.
#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "dtile/digraph.hpp"
#include "dtile/search.hpp"

namespace dtile::detail {

/// Placement order for a pattern: highest degree first, then always the vertex
/// with most edges into the placed prefix (ties: higher degree, lower index).
struct PatternPlan {
  int k = 0;
  std::vector<int> order;
  std::vector<std::vector<int>> from_prefix;  // depths j with order[j] -> order[i]
  std::vector<std::vector<int>> to_prefix;    // depths j with order[i] -> order[j]
  std::vector<int> out_deg;                   // pattern degrees, by depth
  std::vector<int> in_deg;

  explicit PatternPlan(const OrientedGraph& pattern);
};

class Engine {
 public:
  Engine(const PatternPlan& plan, const OrientedGraph& host) : plan_(plan), host_(host) {
    cand_.assign(static_cast<std::size_t>(plan.k), VertexSet(host.order()));
    at_.assign(static_cast<std::size_t>(plan.k), -1);
  }

  /// Host vertices passing the degree filter for each depth, intersected with
  /// the per-pattern-vertex constraints (if any) and `within` (if any).
  std::vector<VertexSet> base_sets(const std::vector<VertexSet>* constraints, const VertexSet* within) const {
    std::vector<VertexSet> base;
    base.reserve(static_cast<std::size_t>(plan_.k));
    for (int i = 0; i < plan_.k; ++i) {
      VertexSet s = within ? *within : host_.all();
      if (constraints) s &= (*constraints)[static_cast<std::size_t>(plan_.order[static_cast<std::size_t>(i)])];
      s.for_each([&](int v) {
        if (host_.out_degree(v) < plan_.out_deg[static_cast<std::size_t>(i)] ||
            host_.in_degree(v) < plan_.in_deg[static_cast<std::size_t>(i)])
          s.reset(v);
      });
      base.push_back(std::move(s));
    }
    return base;
  }

  /// Calls visit(map) for each embedding (map indexed by pattern vertex) until
  /// visit returns false (Found), the space is exhausted (NotFound) or `nodes`
  /// reaches `limit` (Exhausted).
  template <class Visit>
  SearchStatus run(std::span<const VertexSet> base, std::uint64_t limit, std::uint64_t& nodes, Visit&& visit,
                   std::mt19937_64* rng = nullptr) {
    if (plan_.k == 0) return visit(std::vector<int>{}) ? SearchStatus::NotFound : SearchStatus::Found;
    used_ = VertexSet(host_.order());
    map_.assign(static_cast<std::size_t>(plan_.k), -1);
    int depth = 0;
    fill(base, 0);
    std::vector<std::vector<int>> shuffled;
    std::vector<std::size_t> pos;
    if (rng) {
      shuffled.resize(static_cast<std::size_t>(plan_.k));
      pos.assign(static_cast<std::size_t>(plan_.k), 0);
      shuffle_level(0, shuffled, pos, *rng);
    }
    while (depth >= 0) {
      const auto d = static_cast<std::size_t>(depth);
      int v;
      if (rng) {
        v = pos[d] < shuffled[d].size() ? shuffled[d][pos[d]++] : -1;
      } else {
        v = cand_[d].next(at_[d]);
      }
      if (at_[d] >= 0) used_.reset(at_[d]);
      at_[d] = v;
      if (v < 0) {
        --depth;
        continue;
      }
      if (++nodes > limit) {
        at_[d] = -1;
        clear_from(0);
        return SearchStatus::Exhausted;
      }
      used_.set(v);
      map_[static_cast<std::size_t>(plan_.order[d])] = v;
      if (depth + 1 == plan_.k) {
        if (!visit(static_cast<const std::vector<int>&>(map_))) {
          clear_from(0);
          return SearchStatus::Found;
        }
        continue;
      }
      ++depth;
      fill(base, depth);
      if (rng) shuffle_level(depth, shuffled, pos, *rng);
    }
    clear_from(0);
    return SearchStatus::NotFound;
  }

 private:
  void fill(std::span<const VertexSet> base, int depth) {
    const auto d = static_cast<std::size_t>(depth);
    VertexSet& c = cand_[d];
    c = base[d];
    c -= used_;
    for (int j : plan_.from_prefix[d]) c &= host_.out(at_[static_cast<std::size_t>(j)]);
    for (int j : plan_.to_prefix[d]) c &= host_.in(at_[static_cast<std::size_t>(j)]);
    at_[d] = -1;
  }

  void shuffle_level(int depth, std::vector<std::vector<int>>& shuffled, std::vector<std::size_t>& pos,
                     std::mt19937_64& rng) {
    const auto d = static_cast<std::size_t>(depth);
    shuffled[d] = cand_[d].to_vector();
    std::shuffle(shuffled[d].begin(), shuffled[d].end(), rng);
    pos[d] = 0;
  }

  void clear_from(int depth) {
    for (auto d = static_cast<std::size_t>(depth); d < at_.size(); ++d) at_[d] = -1;
  }

  const PatternPlan& plan_;
  const OrientedGraph& host_;
  std::vector<VertexSet> cand_;
  std::vector<int> at_;
  std::vector<int> map_;
  VertexSet used_;
};

}  // namespace dtile::detail
