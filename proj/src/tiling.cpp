#include "dtile/tiling.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "dtile/error.hpp"
#include "embedding_engine.hpp"

namespace dtile {

const char* factor_status_name(FactorStatus s) {
  switch (s) {
    case FactorStatus::Yes: return "yes";
    case FactorStatus::No: return "no";
    case FactorStatus::Exhausted: return "exhausted";
  }
  return "?";
}

const char* verdict_name(ObstructionVerdict v) {
  switch (v) {
    case ObstructionVerdict::Infeasible: return "infeasible";
    case ObstructionVerdict::Feasible: return "feasible";
    case ObstructionVerdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

bool verify_tiling(const OrientedGraph& g, const Pattern& pattern, const Tiling& tiling) {
  VertexSet seen(g.order());
  for (const auto& t : tiling.tiles) {
    if (t.vertices.universe() != g.order() || t.vertices.intersects(seen)) return false;
    if (!is_embedding(pattern.graph, g, t.map)) return false;
    VertexSet image(g.order());
    for (int v : t.map) image.set(v);
    if (!(image == t.vertices)) return false;
    seen |= t.vertices;
  }
  return tiling.covered.universe() == g.order() && seen == tiling.covered;
}

namespace {

struct Copy {
  VertexSet vertices;
  Embedding map;
};

class Budget {
 public:
  explicit Budget(std::uint64_t limit) : limit_(limit) {}
  bool spend() { return ++used_ <= limit_ || (exhausted_ = true, false); }
  std::uint64_t remaining() const { return used_ >= limit_ ? 0 : limit_ - used_; }
  void add(std::uint64_t n) {
    used_ += n;
    if (used_ > limit_) exhausted_ = true;
  }
  bool exhausted() const { return exhausted_; }
  std::uint64_t used() const { return used_; }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
  bool exhausted_ = false;
};

/// Copies whose smallest vertex is a given v. Lists over the whole graph are
/// memoised per vertex until kMemoLimit copies are stored; past that, lists are
/// generated inside the current free set on demand.
class TileSource {
 public:
  TileSource(const Pattern& pattern, const OrientedGraph& g)
      : plan_(pattern.graph), g_(g), memo_(static_cast<std::size_t>(g.order())) {}

  bool at(int v, const VertexSet& free, Budget& budget, std::vector<Copy>& out) {
    out.clear();
    auto& slot = memo_[static_cast<std::size_t>(v)];
    if (!slot && stored_ < kMemoLimit) {
      std::vector<Copy> all;
      VertexSet above = VertexSet::range(g_.order(), v, g_.order());
      if (!generate(v, above, budget, all)) return false;
      stored_ += all.size();
      slot = std::move(all);
    }
    if (slot) {
      for (const Copy& c : *slot)
        if (c.vertices.is_subset_of(free)) out.push_back(c);
      return true;
    }
    return generate(v, free, budget, out);
  }

 private:
  static constexpr std::size_t kMemoLimit = 200000;

  bool generate(int v, const VertexSet& within, Budget& budget, std::vector<Copy>& out) {
    const int k = plan_.k;
    detail::Engine engine(plan_, g_);
    std::unordered_set<VertexSet, VertexSetHash> seen;
    VertexSet rest = within;
    rest.reset(v);
    for (int p = 0; p < k; ++p) {
      std::vector<VertexSet> cons(static_cast<std::size_t>(k), rest);
      cons[static_cast<std::size_t>(p)] = VertexSet(g_.order(), {v});
      const auto base = engine.base_sets(&cons, nullptr);
      std::uint64_t nodes = 0;
      const SearchStatus st = engine.run(base, budget.remaining(), nodes, [&](const std::vector<int>& m) {
        VertexSet s(g_.order());
        for (int u : m) s.set(u);
        if (seen.insert(s).second) out.push_back({std::move(s), m});
        return true;
      });
      budget.add(nodes);
      if (st == SearchStatus::Exhausted) {
        budget.add(1);
        return false;
      }
    }
    std::sort(out.begin(), out.end(), [](const Copy& a, const Copy& b) { return lex_less(a.vertices, b.vertices); });
    return true;
  }

  detail::PatternPlan plan_;
  const OrientedGraph& g_;
  std::vector<std::optional<std::vector<Copy>>> memo_;
  std::size_t stored_ = 0;
};

enum class Outcome { Yes, No, Exhausted };

class Solver {
 public:
  Solver(const Pattern& pattern, const OrientedGraph& g, std::uint64_t limit)
      : k_(pattern.order()), source_(pattern, g), budget_(limit) {}

  /// Can `free` be tiled leaving at most `skips` vertices uncovered?
  Outcome feasible(const VertexSet& free, int skips) {
    const int cnt = free.count();
    if (cnt <= skips) return Outcome::Yes;
    if (cnt < k_) return Outcome::No;
    if (auto it = failed_.find(free); it != failed_.end() && it->second >= skips) return Outcome::No;
    const int v = free.first();
    std::vector<Copy> tiles;
    if (!source_.at(v, free, budget_, tiles)) return Outcome::Exhausted;
    for (const Copy& c : tiles) {
      if (!budget_.spend()) return Outcome::Exhausted;
      chosen_.push_back(c);
      if (chosen_.size() > best_.size()) snapshot();
      const Outcome r = feasible(free - c.vertices, skips);
      if (r == Outcome::Yes) {
        if (chosen_.size() >= best_.size()) snapshot();
        return r;
      }
      chosen_.pop_back();
      if (r == Outcome::Exhausted) return r;
    }
    if (skips > 0) {
      if (!budget_.spend()) return Outcome::Exhausted;
      VertexSet next = free;
      next.reset(v);
      const Outcome r = feasible(next, skips - 1);
      if (r != Outcome::No) return r;
    }
    auto& slot = failed_[free];
    slot = std::max(slot, skips);
    return Outcome::No;
  }

  /// Tiles chosen on the current path; valid right after a Yes.
  const std::vector<Copy>& current() const { return chosen_; }
  void reset_path() { chosen_.clear(); }
  const std::vector<Copy>& best() const { return best_; }
  void offer(const std::vector<Copy>& tiles) {
    if (tiles.size() > best_.size()) best_ = tiles;
  }
  Budget& budget() { return budget_; }
  TileSource& source() { return source_; }

 private:
  void snapshot() { best_ = current(); }

  int k_;
  TileSource source_;
  Budget budget_;
  std::vector<Copy> chosen_;
  std::vector<Copy> best_;
  // free set -> largest skip allowance known to fail
  std::unordered_map<VertexSet, int, VertexSetHash> failed_;
};

Tiling make_tiling(const OrientedGraph& g, const Pattern& pattern, const std::vector<Copy>& copies,
                   const Tripartition* parts) {
  Tiling t;
  t.covered = VertexSet(g.order());
  for (const Copy& c : copies) {
    TileRecord rec{c.vertices, c.map, std::nullopt};
    if (parts) {
      Embedding witness;
      rec.type = classify_tile(pattern, g, *parts, rec.vertices, &witness);
      if (rec.type->kind == TileKind::Cross) rec.map = std::move(witness);
    }
    t.covered |= c.vertices;
    t.tiles.push_back(std::move(rec));
  }
  std::sort(t.tiles.begin(), t.tiles.end(),
            [](const TileRecord& a, const TileRecord& b) { return lex_less(a.vertices, b.vertices); });
  return t;
}

/// First tile at each lowest free vertex, skipping vertices with none.
std::vector<Copy> greedy(Solver& solver, const OrientedGraph& g) {
  std::vector<Copy> out;
  VertexSet free = g.all();
  std::vector<Copy> tiles;
  for (int v = free.first(); v >= 0; v = free.next(v)) {
    if (!solver.source().at(v, free, solver.budget(), tiles)) break;
    if (tiles.empty()) continue;
    free -= tiles.front().vertices;
    out.push_back(tiles.front());
  }
  return out;
}

}  // namespace

MaxTilingResult max_tiling(const OrientedGraph& g, const Pattern& pattern, SearchBudget budget,
                           const Tripartition* parts) {
  if (pattern.order() < 1) fail(ErrorCode::ZeroSize, "pattern must have a vertex");
  const int n = g.order();
  const int k = pattern.order();
  Solver solver(pattern, g, budget.node_limit);
  solver.offer(greedy(solver, g));
  MaxTilingResult r;
  r.optimality = Optimality::BudgetBound;
  if (!solver.budget().exhausted()) {
    const int known = n - static_cast<int>(solver.best().size()) * k;
    r.optimality = Optimality::Proven;
    for (int u = n % k; u < known; u += k) {
      solver.reset_path();
      const Outcome o = solver.feasible(g.all(), u);
      if (o == Outcome::Yes) {
        solver.offer(solver.current());
        break;
      }
      if (o == Outcome::Exhausted) {
        r.optimality = Optimality::BudgetBound;
        break;
      }
    }
  }
  r.tiling = make_tiling(g, pattern, solver.best(), parts);
  r.nodes = solver.budget().used();
  return r;
}

FactorResult has_factor(const OrientedGraph& g, const Pattern& pattern, SearchBudget budget,
                        const Tripartition* parts) {
  if (pattern.order() < 1) fail(ErrorCode::ZeroSize, "pattern must have a vertex");
  FactorResult r;
  if (g.order() % pattern.order() != 0) return r;
  Solver solver(pattern, g, budget.node_limit);
  const Outcome o = solver.feasible(g.all(), 0);
  r.nodes = solver.budget().used();
  if (o == Outcome::Yes) {
    r.status = FactorStatus::Yes;
    r.tiling = make_tiling(g, pattern, solver.current(), parts);
  } else {
    r.status = o == Outcome::No ? FactorStatus::No : FactorStatus::Exhausted;
    r.tiling.covered = VertexSet(g.order());
  }
  return r;
}

FactorResult typed_tiling(const OrientedGraph& g, const Pattern& pattern, const Tripartition& parts,
                          const TypeDemand& demand, SearchBudget budget) {
  std::array<int, 6> need{};
  long total = 0;
  for (int i = 0; i < 3; ++i) {
    need[static_cast<std::size_t>(i)] = demand.type[static_cast<std::size_t>(i)];
    need[static_cast<std::size_t>(i + 3)] = demand.cross[static_cast<std::size_t>(i)];
  }
  for (int c : need) {
    if (c < 0) fail(ErrorCode::BadDemand, "demanded counts must be non-negative");
    total += c;
  }
  if (!pattern.roles && (demand.cross[0] || demand.cross[1] || demand.cross[2])) {
    fail(ErrorCode::BadDemand, "cross tiles need a pattern with A/B/C roles");
  }
  if (total * pattern.order() > g.order()) fail(ErrorCode::BadDemand, "demand uses more vertices than the graph has");

  FactorResult r;
  r.tiling.covered = VertexSet(g.order());
  const CopyList copies = enumerate_copies(pattern, g, nullptr, budget);
  r.nodes = copies.nodes;
  // Candidate tiles per category: Type(0..2), Cross(0..2).
  std::array<std::vector<Copy>, 6> cand;
  for (const auto& rec : copies.copies) {
    for (int i = 0; i < 3; ++i) {
      if (need[static_cast<std::size_t>(i)] && rec.vertices.is_subset_of(parts.part(i)))
        cand[static_cast<std::size_t>(i)].push_back({rec.vertices, rec.map});
    }
    if (!pattern.roles) continue;
    for (int i = 0; i < 3; ++i) {
      if (!need[static_cast<std::size_t>(i + 3)]) continue;
      std::vector<VertexSet> cons;
      for (Role role : *pattern.roles) cons.push_back(rec.vertices & parts.part(i + static_cast<int>(role)));
      const EmbedResult e = embed(pattern.graph, g, &cons, {});
      if (e.status == SearchStatus::Found) cand[static_cast<std::size_t>(i + 3)].push_back({rec.vertices, e.map});
    }
  }
  Budget b(budget.node_limit > r.nodes ? budget.node_limit - r.nodes : 0);
  std::vector<const Copy*> chosen;
  // Within a category tiles are picked in increasing index order.
  auto dfs = [&](auto&& self, int cat, int left, std::size_t from, const VertexSet& used) -> Outcome {
    while (cat < 6 && left == 0) {
      ++cat;
      if (cat < 6) {
        left = need[static_cast<std::size_t>(cat)];
        from = 0;
      }
    }
    if (cat == 6) return Outcome::Yes;
    const auto& list = cand[static_cast<std::size_t>(cat)];
    for (std::size_t i = from; i + static_cast<std::size_t>(left) <= list.size(); ++i) {
      if (list[i].vertices.intersects(used)) continue;
      if (!b.spend()) return Outcome::Exhausted;
      chosen.push_back(&list[i]);
      const Outcome o = self(self, cat, left - 1, i + 1, used | list[i].vertices);
      if (o != Outcome::No) return o;
      chosen.pop_back();
    }
    return Outcome::No;
  };
  const Outcome o = dfs(dfs, 0, need[0], 0, VertexSet(g.order()));
  r.nodes += b.used();
  if (o == Outcome::Yes) {
    r.status = FactorStatus::Yes;
    // Tiles carry the category they were picked for.
    std::vector<TileRecord> recs;
    for (const Copy* c : chosen) {
      recs.push_back({c->vertices, c->map, std::nullopt});
      r.tiling.covered |= c->vertices;
    }
    std::size_t at = 0;
    for (int cat = 0; cat < 6; ++cat)
      for (int j = 0; j < need[static_cast<std::size_t>(cat)]; ++j, ++at)
        recs[at].type = TileType{cat < 3 ? TileKind::Type : TileKind::Cross, cat % 3};
    std::sort(recs.begin(), recs.end(),
              [](const TileRecord& a, const TileRecord& b2) { return lex_less(a.vertices, b2.vertices); });
    r.tiling.tiles = std::move(recs);
  } else if (o == Outcome::Exhausted || !copies.complete) {
    r.status = FactorStatus::Exhausted;
  } else {
    r.status = FactorStatus::No;
  }
  return r;
}

ObstructionReport obstruction_report(const OrientedGraph& g, const Pattern& pattern, const Tripartition& parts,
                                     const Tiling& tiling) {
  if (!verify_tiling(g, pattern, tiling)) fail(ErrorCode::BadParameters, "tiling does not verify in the graph");
  if (parts.order() != g.order()) fail(ErrorCode::NotAPartition, "partition is over a different vertex range");
  ObstructionReport rep;
  const std::int64_t h = pattern.order();
  const auto sizes = parts.sizes();
  for (int i = 0; i < 3; ++i) {
    rep.part_sizes[static_cast<std::size_t>(i)] = sizes[static_cast<std::size_t>(i)];
    rep.residues[static_cast<std::size_t>(i)] = residue(sizes[static_cast<std::size_t>(i)], h);
    rep.covered[static_cast<std::size_t>(i)] = tiling.covered.count_and(parts.part(i));
  }
  for (const auto& tile : tiling.tiles) {
    const TileType t = classify_tile(pattern, g, parts, tile.vertices);
    switch (t.kind) {
      case TileKind::Type: ++rep.t[static_cast<std::size_t>(t.part)]; break;
      case TileKind::Cross: (t.part == 0 ? rep.x : t.part == 1 ? rep.y : rep.z) += 1; break;
      case TileKind::Mixed: ++rep.mixed; break;
    }
  }
  if (!pattern.roles) {
    rep.consistent = rep.mixed == 0 && rep.x + rep.y + rep.z == 0;
    rep.note = "pattern has no A/B/C roles; cross bookkeeping unavailable";
    return rep;
  }
  const auto rs = pattern.role_sizes();
  const std::int64_t a = rs[0], b = rs[1], c = rs[2];
  const Triple xyz = {rep.x, rep.y, rep.z};
  const std::int64_t rows[3][3] = {{a, c, b}, {b, a, c}, {c, b, a}};
  for (int i = 0; i < 3; ++i) {
    std::int64_t v = h * rep.t[static_cast<std::size_t>(i)];
    for (int j = 0; j < 3; ++j) v += rows[i][j] * xyz[static_cast<std::size_t>(j)];
    rep.covered_by_counts[static_cast<std::size_t>(i)] = v;
  }
  rep.consistent = rep.mixed == 0 && rep.covered_by_counts == rep.covered;
  rep.congruence_solution = brute_force_solve(CongruenceSystem::abc(a, b, c, rep.residues));
  if (rep.mixed > 0) {
    rep.verdict = ObstructionVerdict::Inconclusive;
    rep.note = "mixed tiles present";
  } else {
    rep.verdict = rep.congruence_solution ? ObstructionVerdict::Feasible : ObstructionVerdict::Infeasible;
  }
  return rep;
}

}  // namespace dtile
