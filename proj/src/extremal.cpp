#include "dtile/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>

#include "dtile/error.hpp"
#include "dtile/parallel.hpp"

namespace dtile {

void validate(const ExtremalParams& p) {
  if (!(p.gamma >= 0) || !(p.c1 > 0) || !(p.c2 > 0) || !(p.c3 > 0)) {
    fail(ErrorCode::BadParameters, "need gamma >= 0 and positive constants");
  }
}

namespace {

void check_frame(const OrientedGraph& g, const Tripartition& parts) {
  if (parts.order() != g.order()) fail(ErrorCode::NotAPartition, "partition is over a different vertex range");
}

}  // namespace

ExtremalReport is_extremal(const OrientedGraph& g, const Tripartition& parts, const ExtremalParams& params) {
  validate(params);
  check_frame(g, parts);
  ExtremalReport r;
  const double n = g.order();
  r.size_slack = params.c1 * params.gamma * n;
  r.edge_slack = params.c2 * params.gamma * n * n;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.edge_matrix[i][j] = cross_edges(g, parts.part(i), parts.part(j));
  r.extremal = true;
  for (int i = 0; i < 3; ++i) {
    auto& d = r.parts[static_cast<std::size_t>(i)];
    d.size = parts.part(i).count();
    d.size_deviation = std::abs(d.size - n / 3.0);
    d.backward_edges = r.edge_matrix[static_cast<std::size_t>((i + 1) % 3)][static_cast<std::size_t>(i)];
    d.size_ok = d.size_deviation <= r.size_slack + 1e-9;
    d.edges_ok = static_cast<double>(d.backward_edges) <= r.edge_slack + 1e-9;
    r.extremal = r.extremal && d.size_ok && d.edges_ok;
  }
  return r;
}

SuperextremalReport is_superextremal(const OrientedGraph& g, const Tripartition& parts, const ExtremalParams& params) {
  SuperextremalReport r;
  r.extremal = is_extremal(g, parts, params);
  const double n = g.order();
  r.degree_threshold = n / 6.0 - params.c3 * params.gamma * n;
  for (int v = 0; v < g.order(); ++v) {
    const int i = parts.part_of(v);
    const int fwd = g.out(v).count_and(parts.part(i + 1));
    const int back = g.in(v).count_and(parts.part(i - 1));
    if (fwd + 1e-9 < r.degree_threshold || back + 1e-9 < r.degree_threshold) r.offending.push_back(v);
  }
  r.superextremal = r.extremal.extremal && r.offending.empty();
  return r;
}

VertexSet good_vertices(const OrientedGraph& g, const Tripartition& parts, int slack) {
  check_frame(g, parts);
  if (slack < 0) fail(ErrorCode::BadParameters, "slack must be >= 0");
  VertexSet good(g.order());
  for (int v = 0; v < g.order(); ++v) {
    const int i = parts.part_of(v);
    const VertexSet& next = parts.part(i + 1);
    const VertexSet& prev = parts.part(i - 1);
    if (g.out(v).count_and(next) >= next.count() - slack && g.in(v).count_and(prev) >= prev.count() - slack)
      good.set(v);
  }
  return good;
}

TransferSearch find_transfer_witness(const OrientedGraph& g, const Pattern& pattern, const Tripartition& parts, int i,
                                     int j, const VertexSet& excluded, SearchBudget budget) {
  check_frame(g, parts);
  if (!pattern.roles || pattern.role_sizes()[0] != 1) fail(ErrorCode::BadPattern, "pattern must be a D(1,b,c)");
  if (i == j || i < 0 || j < 0 || i > 2 || j > 2) fail(ErrorCode::BadParameters, "need distinct parts i, j in 0..2");
  const int h = pattern.order();
  TransferSearch out;
  const auto host = induced(g, g.all() - excluded);
  const CopyList copies = enumerate_copies(pattern, host.graph, nullptr, budget);
  out.complete = copies.complete;

  using Res = std::array<int, 3>;
  struct Item {
    VertexSet set;
    Embedding map;
  };
  std::map<Res, std::vector<Item>> classes;
  for (const auto& c : copies.copies) {
    Item it{VertexSet(g.order()), {}};
    for (int v : c.map) it.map.push_back(host.to_host[static_cast<std::size_t>(v)]);
    for (int v : it.map) it.set.set(v);
    Res r{};
    for (int k = 0; k < 3; ++k) r[static_cast<std::size_t>(k)] = it.set.count_and(parts.part(k)) % h;
    classes[r].push_back(std::move(it));
  }
  Res target{};
  target[static_cast<std::size_t>(i)] = 1;
  target[static_cast<std::size_t>(j)] = h - 1;
  std::vector<Res> keys;
  for (const auto& [k, v] : classes) keys.push_back(k);

  std::uint64_t nodes = 0;
  std::vector<const Item*> chosen;
  // Picks one copy from each listed class, pairwise disjoint; repeated
  // classes use increasing indices.
  auto pick = [&](auto&& self, const std::vector<Res>& combo, std::size_t at, std::size_t from,
                  const VertexSet& used) -> bool {
    if (at == combo.size()) return true;
    const auto& list = classes[combo[at]];
    const std::size_t start = at > 0 && combo[at] == combo[at - 1] ? from : 0;
    for (std::size_t k = start; k < list.size(); ++k) {
      if (list[k].set.intersects(used)) continue;
      if (++nodes > budget.node_limit) {
        out.complete = false;
        return false;
      }
      chosen.push_back(&list[k]);
      if (self(self, combo, at + 1, k + 1, used | list[k].set)) return true;
      chosen.pop_back();
      if (nodes > budget.node_limit) return false;
    }
    return false;
  };
  auto matches = [&](const std::vector<Res>& combo) {
    Res s{};
    for (const auto& r : combo)
      for (int k = 0; k < 3; ++k) s[static_cast<std::size_t>(k)] += r[static_cast<std::size_t>(k)];
    for (int k = 0; k < 3; ++k)
      if (s[static_cast<std::size_t>(k)] % h != target[static_cast<std::size_t>(k)]) return false;
    return true;
  };
  auto finish = [&]() {
    TransferWitness w{VertexSet(g.order()), {}};
    w.factor.covered = VertexSet(g.order());
    for (const Item* it : chosen) {
      w.set |= it->set;
      w.factor.tiles.push_back({it->set, it->map, std::nullopt});
    }
    w.factor.covered = w.set;
    std::sort(w.factor.tiles.begin(), w.factor.tiles.end(),
              [](const TileRecord& a, const TileRecord& b) { return lex_less(a.vertices, b.vertices); });
    out.witness = std::move(w);
  };
  const std::size_t m = keys.size();
  const VertexSet none(g.order());
  for (std::size_t a = 0; a < m; ++a) {
    const std::vector<Res> combo{keys[a]};
    if (matches(combo) && pick(pick, combo, 0, 0, none)) return finish(), out;
  }
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a; b < m; ++b) {
      const std::vector<Res> combo{keys[a], keys[b]};
      if (matches(combo) && pick(pick, combo, 0, 0, none)) return finish(), out;
    }
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a; b < m; ++b)
      for (std::size_t c = b; c < m; ++c) {
        const std::vector<Res> combo{keys[a], keys[b], keys[c]};
        if (matches(combo) && pick(pick, combo, 0, 0, none)) return finish(), out;
      }
  return out;
}

std::uint64_t backward_edges(const OrientedGraph& g, const Tripartition& parts) {
  std::uint64_t total = 0;
  for (int i = 0; i < 3; ++i) total += cross_edges(g, parts.part(i + 1), parts.part(i));
  return total;
}

namespace {

class LocalSearch {
 public:
  LocalSearch(const OrientedGraph& g, std::vector<int> labels) : g_(g), labels_(std::move(labels)) {
    const int n = g.order();
    for (auto& p : parts_) p = VertexSet(n);
    for (int v = 0; v < n; ++v) parts_[static_cast<std::size_t>(labels_[static_cast<std::size_t>(v)])].set(v);
    const int slack = std::max(1, n / 12);
    lo_ = n / 3 - slack;
    hi_ = (n + 2) / 3 + slack;
    objective_ = 0;
    for (int v = 0; v < n; ++v) objective_ += static_cast<std::uint64_t>(g.out(v).count_and(part(label(v) - 1)));
    trail_.push_back(objective_);
  }

  void descend() {
    const int n = g_.order();
    for (int guard = 0; guard < 100 * n + 100; ++guard) {
      if (!best_move() && !best_swap()) break;
    }
  }

  void reassign() {
    for (int v = 0; v < g_.order(); ++v) {
      const int p = label(v);
      int best = p, best_score = score(v, p);
      for (int q = 0; q < 3; ++q) {
        if (score(v, q) > best_score) {
          best = q;
          best_score = score(v, q);
        }
      }
      if (best == p || !size_ok(p, best) || delta(v, best) > 0) continue;
      apply(v, best);
      trail_.push_back(objective_);
      reassigned_.push_back(v);
    }
  }

  std::uint64_t objective() const { return objective_; }
  const std::vector<int>& labels() const { return labels_; }
  const std::vector<std::uint64_t>& trail() const { return trail_; }
  const std::vector<int>& reassigned() const { return reassigned_; }

 private:
  int label(int v) const { return labels_[static_cast<std::size_t>(v)]; }
  const VertexSet& part(int i) const { return parts_[static_cast<std::size_t>(((i % 3) + 3) % 3)]; }

  // Backward edges at v if v sat in part p.
  long contribution(int v, int p) const {
    return g_.out(v).count_and(part(p - 1)) + g_.in(v).count_and(part(p + 1));
  }
  long delta(int v, int q) const { return contribution(v, q) - contribution(v, label(v)); }
  int score(int v, int i) const { return std::min(g_.out(v).count_and(part(i + 1)), g_.in(v).count_and(part(i - 1))); }
  bool size_ok(int from, int to) const { return part(from).count() - 1 >= lo_ && part(to).count() + 1 <= hi_; }

  void apply(int v, int q) {
    const long d = delta(v, q);
    parts_[static_cast<std::size_t>(label(v))].reset(v);
    parts_[static_cast<std::size_t>(q)].set(v);
    labels_[static_cast<std::size_t>(v)] = q;
    objective_ = static_cast<std::uint64_t>(static_cast<long>(objective_) + d);
  }

  bool best_move() {
    long best = 0;
    int bv = -1, bq = -1;
    for (int v = 0; v < g_.order(); ++v)
      for (int q = 0; q < 3; ++q) {
        if (q == label(v) || !size_ok(label(v), q)) continue;
        const long d = delta(v, q);
        if (d < best) best = d, bv = v, bq = q;
      }
    if (bv < 0) return false;
    apply(bv, bq);
    trail_.push_back(objective_);
    return true;
  }

  bool best_swap() {
    long best = 0;
    int bu = -1, bw = -1;
    for (int u = 0; u < g_.order(); ++u)
      for (int w = u + 1; w < g_.order(); ++w) {
        const int p = label(u), q = label(w);
        if (p == q) continue;
        const long d1 = delta(u, q);
        apply(u, q);
        const long d2 = delta(w, p);
        apply(u, p);
        if (d1 + d2 < best) best = d1 + d2, bu = u, bw = w;
      }
    if (bu < 0) return false;
    const int p = label(bu), q = label(bw);
    apply(bu, q);
    apply(bw, p);
    trail_.push_back(objective_);
    return true;
  }

  const OrientedGraph& g_;
  std::vector<int> labels_;
  std::array<VertexSet, 3> parts_;
  int lo_ = 0, hi_ = 0;
  std::uint64_t objective_ = 0;
  std::vector<std::uint64_t> trail_;
  std::vector<int> reassigned_;
};

}  // namespace

TripartitionSearch best_tripartition(const OrientedGraph& g, int restarts, std::uint64_t seed) {
  const int n = g.order();
  if (n < 3) fail(ErrorCode::TooSmall, "need at least 3 vertices");
  restarts = std::max(restarts, 1);
  std::vector<std::optional<LocalSearch>> runs(static_cast<std::size_t>(restarts));
  parallel_for(runs.size(), [&](std::size_t r) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(r)};
    std::mt19937_64 rng(seq);
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<int> labels(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) labels[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])] = k % 3;
    LocalSearch ls(g, std::move(labels));
    ls.descend();
    ls.reassign();
    runs[r].emplace(std::move(ls));
  });
  std::size_t best = 0;
  for (std::size_t r = 1; r < runs.size(); ++r)
    if (runs[r]->objective() < runs[best]->objective()) best = r;
  TripartitionSearch out;
  out.parts = Tripartition::from_labels(runs[best]->labels());
  out.backward = runs[best]->objective();
  out.best_restart = static_cast<int>(best);
  out.trail = runs[best]->trail();
  out.reassigned = runs[best]->reassigned();
  return out;
}

}  // namespace dtile
