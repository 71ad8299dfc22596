#include "dtile/search.hpp"

#include <algorithm>
#include <random>
#include <unordered_set>

#include "dtile/error.hpp"
#include "dtile/parallel.hpp"
#include "embedding_engine.hpp"

namespace dtile {

namespace detail {

PatternPlan::PatternPlan(const OrientedGraph& pattern) : k(pattern.order()) {
  std::vector<char> placed(static_cast<std::size_t>(k), 0);
  auto degree = [&](int v) { return pattern.out_degree(v) + pattern.in_degree(v); };
  for (int step = 0; step < k; ++step) {
    int best = -1, best_links = -1;
    for (int v = 0; v < k; ++v) {
      if (placed[static_cast<std::size_t>(v)]) continue;
      int links = 0;
      for (int u : order) links += pattern.adjacent(u, v) ? 1 : 0;
      if (best < 0 || links > best_links || (links == best_links && degree(v) > degree(best))) {
        best = v;
        best_links = links;
      }
    }
    placed[static_cast<std::size_t>(best)] = 1;
    std::vector<int> from, to;
    for (int j = 0; j < step; ++j) {
      if (pattern.has_edge(order[static_cast<std::size_t>(j)], best)) from.push_back(j);
      if (pattern.has_edge(best, order[static_cast<std::size_t>(j)])) to.push_back(j);
    }
    order.push_back(best);
    from_prefix.push_back(std::move(from));
    to_prefix.push_back(std::move(to));
    out_deg.push_back(pattern.out_degree(best));
    in_deg.push_back(pattern.in_degree(best));
  }
}

}  // namespace detail

const char* status_name(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found: return "found";
    case SearchStatus::NotFound: return "not-found";
    case SearchStatus::Exhausted: return "exhausted";
  }
  return "?";
}

EmbedResult embed(const OrientedGraph& pattern, const OrientedGraph& host, const std::vector<VertexSet>* constraints,
                  SearchBudget budget) {
  EmbedResult r;
  if (pattern.order() > host.order()) return r;
  if (constraints && constraints->size() != static_cast<std::size_t>(pattern.order())) {
    fail(ErrorCode::BadParameters, "need one candidate set per pattern vertex");
  }
  const detail::PatternPlan plan(pattern);
  detail::Engine engine(plan, host);
  const auto base = engine.base_sets(constraints, nullptr);
  r.status = engine.run(base, budget.node_limit, r.nodes, [&](const std::vector<int>& m) {
    r.map = m;
    return false;
  });
  return r;
}

bool is_embedding(const OrientedGraph& pattern, const OrientedGraph& host, const Embedding& map) {
  if (map.size() != static_cast<std::size_t>(pattern.order())) return false;
  VertexSet seen(host.order());
  for (int v : map) {
    if (v < 0 || v >= host.order() || seen.test(v)) return false;
    seen.set(v);
  }
  for (const Edge& e : pattern.edges())
    if (!host.has_edge(map[static_cast<std::size_t>(e.from)], map[static_cast<std::size_t>(e.to)])) return false;
  return true;
}

std::string to_string(const TileType& t) {
  switch (t.kind) {
    case TileKind::Type: return "type(" + std::to_string(t.part + 1) + ")";
    case TileKind::Cross: {
      std::string s = "cross(";
      for (int i = 0; i < 3; ++i) s += std::to_string((t.part + i) % 3 + 1) + (i < 2 ? "," : ")");
      return s;
    }
    case TileKind::Mixed: return "mixed";
  }
  return "?";
}

TileType classify_tile(const Pattern& pattern, const OrientedGraph& host, const Tripartition& parts,
                       const VertexSet& vertices, Embedding* cross_witness) {
  for (int i = 0; i < 3; ++i)
    if (vertices.is_subset_of(parts.part(i))) return {TileKind::Type, i};
  if (!pattern.roles) return {TileKind::Mixed, -1};
  const auto& roles = *pattern.roles;
  for (int i = 0; i < 3; ++i) {
    std::vector<VertexSet> cons;
    cons.reserve(roles.size());
    for (Role r : roles) cons.push_back(vertices & parts.part(i + static_cast<int>(r)));
    const EmbedResult e = embed(pattern.graph, host, &cons, {});
    if (e.status == SearchStatus::Found) {
      if (cross_witness) *cross_witness = e.map;
      return {TileKind::Cross, i};
    }
  }
  return {TileKind::Mixed, -1};
}

namespace {

VertexSet image_of(const Embedding& map, int n) {
  VertexSet s(n);
  for (int v : map) s.set(v);
  return s;
}

void tag(const Pattern& pattern, const OrientedGraph& host, const Tripartition* parts, TileRecord& rec) {
  if (!parts) return;
  Embedding witness;
  rec.type = classify_tile(pattern, host, *parts, rec.vertices, &witness);
  if (rec.type->kind == TileKind::Cross) rec.map = std::move(witness);
}

}  // namespace

CopyList enumerate_copies(const Pattern& pattern, const OrientedGraph& host, const Tripartition* parts,
                          SearchBudget budget) {
  CopyList out;
  if (pattern.order() > host.order()) return out;
  const detail::PatternPlan plan(pattern.graph);
  detail::Engine engine(plan, host);
  const auto base = engine.base_sets(nullptr, nullptr);
  std::unordered_set<VertexSet, VertexSetHash> seen;
  const SearchStatus st = engine.run(base, budget.node_limit, out.nodes, [&](const std::vector<int>& m) {
    VertexSet s = image_of(m, host.order());
    if (seen.insert(s).second) {
      out.copies.push_back({std::move(s), m, std::nullopt});
      if (out.copies.size() >= budget.copy_limit) return false;
    }
    return true;
  });
  // Stopping at the copy limit means the list may be partial.
  out.complete = st == SearchStatus::NotFound;
  std::sort(out.copies.begin(), out.copies.end(),
            [](const TileRecord& a, const TileRecord& b) { return lex_less(a.vertices, b.vertices); });
  for (auto& rec : out.copies) tag(pattern, host, parts, rec);
  return out;
}

SampleResult sample_copies(const Pattern& pattern, const OrientedGraph& host, const Tripartition* parts,
                           std::size_t count, std::uint64_t seed, SearchBudget per_sample) {
  std::vector<std::optional<TileRecord>> slots(count);
  const detail::PatternPlan plan(pattern.graph);
  parallel_for(count, [&](std::size_t i) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(i >> 32)};
    std::mt19937_64 rng(seq);
    detail::Engine engine(plan, host);
    const auto base = engine.base_sets(nullptr, nullptr);
    std::uint64_t nodes = 0;
    Embedding found;
    const SearchStatus st = engine.run(
        base, per_sample.node_limit, nodes,
        [&](const std::vector<int>& m) {
          found = m;
          return false;
        },
        &rng);
    if (st != SearchStatus::Found) return;
    TileRecord rec{image_of(found, host.order()), found, std::nullopt};
    tag(pattern, host, parts, rec);
    slots[i] = std::move(rec);
  });
  SampleResult r;
  for (auto& s : slots) {
    if (s) {
      r.samples.push_back(std::move(*s));
    } else {
      ++r.failed;
    }
  }
  return r;
}

Embedding find_tt(const OrientedGraph& tournament, int k) {
  if (!is_tournament(tournament)) fail(ErrorCode::NotTournament, "find_tt needs a tournament");
  if (k < 1) fail(ErrorCode::BadParameters, "k must be >= 1");
  const int n = tournament.order();
  if (k - 1 >= 31 || n < (1 << (k - 1))) fail(ErrorCode::TooSmall, "need at least 2^(k-1) vertices");
  Embedding chain;
  VertexSet current = tournament.all();
  while (static_cast<int>(chain.size()) < k) {
    int best = -1, best_deg = -1;
    current.for_each([&](int v) {
      const int d = tournament.out(v).count_and(current);
      if (d > best_deg) {
        best = v;
        best_deg = d;
      }
    });
    chain.push_back(best);
    current &= tournament.out(best);
  }
  return chain;
}

SquarePathResult longest_square_path_order(const OrientedGraph& g, SearchBudget budget) {
  SquarePathResult r;
  const int n = g.order();
  if (n == 0) return r;
  r.order = 1;
  r.witness = {0};
  std::vector<int> path;
  VertexSet used(n);
  bool stop = false;
  // Extends path whose last two vertices are path[s-2], path[s-1].
  auto extend = [&](auto&& self) -> void {
    const std::size_t s = path.size();
    if (static_cast<int>(s) > r.order) {
      r.order = static_cast<int>(s);
      r.witness = path;
    }
    if (r.order == n) stop = true;
    if (stop) return;
    VertexSet next = g.out(path[s - 1]);
    if (s >= 2) next &= g.out(path[s - 2]);
    next -= used;
    next.for_each([&](int v) {
      if (stop) return;
      if (++r.nodes > budget.node_limit) {
        r.exact = false;
        stop = true;
        return;
      }
      path.push_back(v);
      used.set(v);
      self(self);
      used.reset(v);
      path.pop_back();
    });
  };
  for (int v = 0; v < n && !stop; ++v) {
    path = {v};
    used.set(v);
    extend(extend);
    used.reset(v);
  }
  return r;
}

EmbedResult contains_cycle_power(const OrientedGraph& g, int l, int k, SearchBudget budget) {
  if (k < 1 || l < 2 * k + 1) fail(ErrorCode::BadParameters, "need k >= 1 and l >= 2k + 1");
  return embed(power(directed_cycle(l), k).graph, g, nullptr, budget);
}

std::uint64_t cyc_count(const OrientedGraph& g, const VertexSet& a, const VertexSet& b, const VertexSet& c) {
  std::uint64_t total = 0;
  VertexSet x(g.order());
  a.for_each([&](int v1) {
    (g.out(v1) & b).for_each([&](int v2) {
      x.assign_and(g.out(v2), g.in(v1));
      total += static_cast<std::uint64_t>(x.count_and(c));
    });
  });
  return total;
}

std::uint64_t k4m_count(const OrientedGraph& g, const VertexSet& a, const VertexSet& b, const VertexSet& c,
                        const VertexSet& d) {
  // v1 and v4 both lie in X = N+(v3) & N-(v2) for an edge v2 -> v3.
  std::uint64_t total = 0;
  VertexSet x(g.order());
  b.for_each([&](int v2) {
    (g.out(v2) & c).for_each([&](int v3) {
      x.assign_and(g.out(v3), g.in(v2));
      const auto xa = static_cast<std::uint64_t>(x.count_and(a));
      const auto xd = static_cast<std::uint64_t>(x.count_and(d));
      const auto both = static_cast<std::uint64_t>((x & a).count_and(d));
      total += xa * xd - both;
    });
  });
  return total;
}

VertexSet strong_neighborhood(const OrientedGraph& g, const VertexSet& a, int slack, Sign sign) {
  if (slack < 0) fail(ErrorCode::BadParameters, "slack must be >= 0");
  VertexSet out(g.order());
  const int need = a.count() - slack;
  for (int x = 0; x < g.order(); ++x) {
    if (a.test(x)) continue;
    const int d = (sign == Sign::Plus ? g.in(x) : g.out(x)).count_and(a);
    if (d >= need) out.set(x);
  }
  return out;
}

}  // namespace dtile
