#include "dtile/digraph.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <numeric>
#include <sstream>

#include "dtile/error.hpp"

namespace dtile {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::LoopEdge: return "LoopEdge";
    case ErrorCode::TwoCycle: return "TwoCycle";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::SameVertex: return "SameVertex";
    case ErrorCode::ZeroSize: return "ZeroSize";
    case ErrorCode::TooSmall: return "TooSmall";
    case ErrorCode::NotOriented: return "NotOriented";
    case ErrorCode::ZeroPart: return "ZeroPart";
    case ErrorCode::PartTooSmall: return "PartTooSmall";
    case ErrorCode::BadParameters: return "BadParameters";
    case ErrorCode::DivisibleByThree: return "DivisibleByThree";
    case ErrorCode::ZeroModulus: return "ZeroModulus";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::BadTargets: return "BadTargets";
    case ErrorCode::BadSizes: return "BadSizes";
    case ErrorCode::NotTournament: return "NotTournament";
    case ErrorCode::BadDemand: return "BadDemand";
    case ErrorCode::NotAPartition: return "NotAPartition";
    case ErrorCode::Overlap: return "Overlap";
    case ErrorCode::BadSize: return "BadSize";
    case ErrorCode::BadPattern: return "BadPattern";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

OrientedGraph OrientedGraph::build(int n, std::span<const Edge> edges) {
  if (n < 0) fail(ErrorCode::OutOfRange, "negative vertex count");
  OrientedGraph g;
  g.n_ = n;
  g.out_.assign(static_cast<std::size_t>(n), VertexSet(n));
  g.in_.assign(static_cast<std::size_t>(n), VertexSet(n));
  for (const Edge& e : edges) {
    if (e.from < 0 || e.from >= n || e.to < 0 || e.to >= n) {
      fail(ErrorCode::OutOfRange, "edge (" + std::to_string(e.from) + "," + std::to_string(e.to) +
                                      ") outside [0," + std::to_string(n) + ")");
    }
    if (e.from == e.to) fail(ErrorCode::LoopEdge, "loop at vertex " + std::to_string(e.from));
    if (g.out_[static_cast<std::size_t>(e.to)].test(e.from)) {
      fail(ErrorCode::TwoCycle, "both (" + std::to_string(e.from) + "," + std::to_string(e.to) +
                                    ") and its reverse supplied");
    }
    if (!g.out_[static_cast<std::size_t>(e.from)].test(e.to)) {
      g.out_[static_cast<std::size_t>(e.from)].set(e.to);
      g.in_[static_cast<std::size_t>(e.to)].set(e.from);
      ++g.m_;
    }
  }
  return g;
}

std::vector<Edge> OrientedGraph::edges() const {
  std::vector<Edge> es;
  es.reserve(m_);
  for (int u = 0; u < n_; ++u) out(u).for_each([&](int v) { es.push_back({u, v}); });
  return es;
}

DegreeProfile degree_profile(const OrientedGraph& g) {
  DegreeProfile p;
  const int n = g.order();
  p.out.resize(static_cast<std::size_t>(n));
  p.in.resize(static_cast<std::size_t>(n));
  if (n == 0) return p;
  p.min_semi_degree = std::numeric_limits<int>::max();
  p.min_total_degree = std::numeric_limits<int>::max();
  for (int v = 0; v < n; ++v) {
    const int o = g.out_degree(v);
    const int i = g.in_degree(v);
    p.out[static_cast<std::size_t>(v)] = o;
    p.in[static_cast<std::size_t>(v)] = i;
    p.min_semi_degree = std::min({p.min_semi_degree, o, i});
    p.min_total_degree = std::min(p.min_total_degree, o + i);
  }
  // A lone vertex has degree 0; the convention for the empty graph is 0 as well.
  return p;
}

bool is_tournament(const OrientedGraph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  return g.edge_count() == n * (n == 0 ? 0 : n - 1) / 2;
}

bool is_semiregular_tournament(const OrientedGraph& g) {
  if (!is_tournament(g)) return false;
  const int n = g.order();
  const int want = n == 0 ? 0 : (n - 1) / 2;
  return degree_profile(g).min_semi_degree == want;
}

OrientedGraph reverse(const OrientedGraph& g) {
  std::vector<Edge> es = g.edges();
  for (Edge& e : es) std::swap(e.from, e.to);
  return OrientedGraph::build(g.order(), es);
}

InducedGraph induced(const OrientedGraph& g, const VertexSet& s) {
  if (s.universe() != g.order()) fail(ErrorCode::OutOfRange, "vertex set over a different range");
  InducedGraph r;
  r.to_host = s.to_vector();
  std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < r.to_host.size(); ++i) index[static_cast<std::size_t>(r.to_host[i])] = static_cast<int>(i);
  std::vector<Edge> es;
  for (int u : r.to_host) {
    (g.out(u) & s).for_each([&](int v) {
      es.push_back({index[static_cast<std::size_t>(u)], index[static_cast<std::size_t>(v)]});
    });
  }
  r.graph = OrientedGraph::build(static_cast<int>(r.to_host.size()), es);
  return r;
}

OrientedGraph blow_up(const OrientedGraph& g, int t) {
  if (t < 1) fail(ErrorCode::BadParameters, "blow-up multiplicity must be >= 1");
  std::vector<int> sizes(static_cast<std::size_t>(g.order()), t);
  return blow_up(g, sizes);
}

OrientedGraph blow_up(const OrientedGraph& g, std::span<const int> sizes) {
  if (sizes.size() != static_cast<std::size_t>(g.order())) {
    fail(ErrorCode::BadParameters, "one class size per vertex required");
  }
  std::vector<int> offset(sizes.size() + 1, 0);
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (sizes[i] < 0) fail(ErrorCode::BadParameters, "class sizes must be >= 0");
    offset[i + 1] = offset[i] + sizes[i];
  }
  std::vector<Edge> es;
  for (const Edge& e : g.edges()) {
    const auto u = static_cast<std::size_t>(e.from);
    const auto v = static_cast<std::size_t>(e.to);
    for (int i = offset[u]; i < offset[u + 1]; ++i)
      for (int j = offset[v]; j < offset[v + 1]; ++j) es.push_back({i, j});
  }
  return OrientedGraph::build(offset.back(), es);
}

PairStats pair_stats(const OrientedGraph& g, int u, int v, const VertexSet& a) {
  if (u == v) fail(ErrorCode::SameVertex, "pair statistics need two distinct vertices");
  if (u < 0 || v < 0 || u >= g.order() || v >= g.order()) fail(ErrorCode::OutOfRange, "vertex out of range");
  PairStats s;
  const VertexSet ou = g.out(u) & a;
  const VertexSet iu = g.in(u) & a;
  s.out_out = ou.count_and(g.out(v));
  s.out_in = ou.count_and(g.in(v));
  s.in_out = iu.count_and(g.out(v));
  s.in_in = iu.count_and(g.in(v));
  return s;
}

std::size_t cross_edges(const OrientedGraph& g, const VertexSet& a, const VertexSet& b) {
  std::size_t total = 0;
  a.for_each([&](int u) { total += static_cast<std::size_t>(g.out(u).count_and(b)); });
  return total;
}

void check_partition(int n, std::span<const VertexSet> parts) {
  VertexSet seen(n);
  for (const VertexSet& p : parts) {
    if (p.universe() != n) fail(ErrorCode::NotAPartition, "part over a different vertex range");
    if (seen.intersects(p)) fail(ErrorCode::NotAPartition, "parts are not disjoint");
    seen |= p;
  }
  if (seen.count() != n) fail(ErrorCode::NotAPartition, "parts do not cover every vertex");
}

Tripartition::Tripartition(int n, std::array<VertexSet, 3> parts) : n_(n), parts_(std::move(parts)) {
  check_partition(n, parts_);
  labels_.assign(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < 3; ++i) parts_[static_cast<std::size_t>(i)].for_each([&](int v) { labels_[static_cast<std::size_t>(v)] = i; });
}

Tripartition Tripartition::from_labels(std::span<const int> part_of) {
  const int n = static_cast<int>(part_of.size());
  std::array<VertexSet, 3> parts{VertexSet(n), VertexSet(n), VertexSet(n)};
  for (int v = 0; v < n; ++v) {
    const int p = part_of[static_cast<std::size_t>(v)];
    if (p < 0 || p > 2) fail(ErrorCode::NotAPartition, "part labels must be 0, 1 or 2");
    parts[static_cast<std::size_t>(p)].set(v);
  }
  return Tripartition(n, std::move(parts));
}

std::array<int, 3> Tripartition::sizes() const {
  return {parts_[0].count(), parts_[1].count(), parts_[2].count()};
}

// Text formats -------------------------------------------------------------

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool starts_with(const std::string& s, const std::string& prefix) {
  return s.rfind(prefix, 0) == 0;
}

}  // namespace

GraphDocument parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int n = -1;
  std::vector<Edge> es;
  std::optional<std::vector<Role>> roles;
  std::optional<std::vector<int>> labels;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty()) continue;
    if (t[0] == '#') {
      const std::string body = trim(t.substr(1));
      if (starts_with(body, "roles:")) {
        std::istringstream rs(body.substr(6));
        std::vector<Role> rv;
        std::string tok;
        while (rs >> tok) {
          if (tok == "A") rv.push_back(Role::A);
          else if (tok == "B") rv.push_back(Role::B);
          else if (tok == "C") rv.push_back(Role::C);
          else fail(ErrorCode::Parse, "line " + std::to_string(lineno) + ": bad role '" + tok + "'");
        }
        roles = std::move(rv);
      } else if (starts_with(body, "parts:")) {
        std::istringstream ps(body.substr(6));
        std::vector<int> lv;
        int p = 0;
        while (ps >> p) lv.push_back(p);
        if (!ps.eof()) fail(ErrorCode::Parse, "line " + std::to_string(lineno) + ": bad part label");
        labels = std::move(lv);
      }
      continue;
    }
    std::istringstream ls(t);
    if (n < 0) {
      if (!(ls >> n) || n < 0) fail(ErrorCode::Parse, "line " + std::to_string(lineno) + ": expected vertex count");
      std::string rest;
      if (ls >> rest) fail(ErrorCode::Parse, "line " + std::to_string(lineno) + ": trailing text after vertex count");
      continue;
    }
    Edge e;
    std::string rest;
    if (!(ls >> e.from >> e.to) || (ls >> rest)) {
      fail(ErrorCode::Parse, "line " + std::to_string(lineno) + ": expected 'u v'");
    }
    es.push_back(e);
  }
  if (n < 0) fail(ErrorCode::Parse, "missing vertex count");
  GraphDocument doc;
  doc.graph = OrientedGraph::build(n, es);
  if (roles) {
    if (static_cast<int>(roles->size()) != n) fail(ErrorCode::Parse, "roles line must list one role per vertex");
    doc.roles = std::move(roles);
  }
  if (labels) {
    if (static_cast<int>(labels->size()) != n) fail(ErrorCode::Parse, "parts line must list one label per vertex");
    doc.parts = Tripartition::from_labels(*labels);
  }
  return doc;
}

std::string write_edge_list(const OrientedGraph& g, const std::vector<Role>* roles, const Tripartition* parts) {
  std::ostringstream out;
  if (roles) {
    out << "# roles:";
    for (Role r : *roles) out << ' ' << (r == Role::A ? 'A' : r == Role::B ? 'B' : 'C');
    out << '\n';
  }
  if (parts) {
    out << "# parts:";
    for (int l : parts->labels()) out << ' ' << l;
    out << '\n';
  }
  out << g.order() << '\n';
  for (const Edge& e : g.edges()) out << e.from << ' ' << e.to << '\n';
  return out.str();
}

std::string write_dot(const OrientedGraph& g, const Tripartition* parts) {
  static constexpr const char* kColors[3] = {"red", "blue", "forestgreen"};
  std::ostringstream out;
  out << "digraph G {\n";
  for (int v = 0; v < g.order(); ++v) {
    out << "  " << v;
    if (parts) out << " [color=" << kColors[parts->part_of(v)] << ", label=\"" << v << "\"]";
    out << ";\n";
  }
  for (const Edge& e : g.edges()) out << "  " << e.from << " -> " << e.to << ";\n";
  out << "}\n";
  return out.str();
}

GraphDocument read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::Io, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_edge_list(ss.str());
}

}  // namespace dtile
