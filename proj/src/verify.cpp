#include "dtile/verify.hpp"

#include <chrono>
#include <random>

#include "dtile/congruence.hpp"
#include "dtile/constructions.hpp"
#include "dtile/error.hpp"
#include "dtile/lattice.hpp"
#include "dtile/patterns.hpp"
#include "dtile/tiling.hpp"
#include "json_util.hpp"

namespace dtile {

using nlohmann::json;
using detail::graph_json;
using detail::tiling_json;
using detail::triple_json;

const char* verdict_name(CheckVerdict v) {
  switch (v) {
    case CheckVerdict::Pass: return "Pass";
    case CheckVerdict::Fail: return "Fail";
    case CheckVerdict::Exhausted: return "Exhausted";
  }
  return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

// Collects sub-assertion outcomes. Fail beats Exhausted beats Pass; the first
// failure becomes the counterexample.
class Audit {
 public:
  explicit Audit(std::string name) : name_(std::move(name)), start_(Clock::now()) {}

  void pass(const std::string& what, json detail = json::object()) { add(what, CheckVerdict::Pass, std::move(detail)); }
  void exhausted(const std::string& what, json detail = json::object()) {
    add(what, CheckVerdict::Exhausted, std::move(detail));
  }
  void fail(const std::string& what, json counterexample) {
    if (counterexample_.is_null()) counterexample_ = {{"assertion", what}, {"witness", counterexample}};
    add(what, CheckVerdict::Fail, std::move(counterexample));
  }
  void expect(bool ok, const std::string& what, json detail = json::object()) {
    ok ? pass(what, std::move(detail)) : fail(what, std::move(detail));
  }
  void note(const std::string& key, json value) { notes_[key] = std::move(value); }

  CheckResult finish() {
    CheckResult r;
    r.name = name_;
    r.verdict = verdict_;
    r.evidence = {{"assertions", std::move(items_)}};
    if (!notes_.empty()) r.evidence["notes"] = std::move(notes_);
    if (!counterexample_.is_null()) r.evidence["counterexample"] = std::move(counterexample_);
    r.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start_).count();
    return r;
  }

 private:
  void add(const std::string& what, CheckVerdict v, json detail) {
    items_.push_back({{"assertion", what}, {"verdict", verdict_name(v)}, {"detail", std::move(detail)}});
    if (v == CheckVerdict::Fail) verdict_ = CheckVerdict::Fail;
    if (v == CheckVerdict::Exhausted && verdict_ == CheckVerdict::Pass) verdict_ = CheckVerdict::Exhausted;
  }

  std::string name_;
  Clock::time_point start_;
  CheckVerdict verdict_ = CheckVerdict::Pass;
  json items_ = json::array();
  json notes_ = json::object();
  json counterexample_;
};

OrientedGraph without_edge(const OrientedGraph& g, int u, int v) {
  auto edges = g.edges();
  std::erase(edges, Edge{u, v});
  return OrientedGraph::build(g.order(), edges);
}

OrientedGraph with_reversed(const OrientedGraph& g, int u, int v) {
  auto edges = g.edges();
  for (auto& e : edges)
    if (e == Edge{u, v}) e = {v, u};
  return OrientedGraph::build(g.order(), edges);
}

bool regular(const OrientedGraph& g, int d) {
  for (int v = 0; v < g.order(); ++v)
    if (g.out_degree(v) != d || g.in_degree(v) != d) return false;
  return true;
}

json embed_json(const EmbedResult& r) {
  return {{"status", status_name(r.status)}, {"map", r.map}, {"nodes", r.nodes}};
}

// Records an expected non-containment.
void expect_absent(Audit& audit, const std::string& what, const EmbedResult& r) {
  if (r.status == SearchStatus::NotFound) audit.pass(what, embed_json(r));
  else if (r.status == SearchStatus::Exhausted) audit.exhausted(what, embed_json(r));
  else audit.fail(what, embed_json(r));
}

void expect_present(Audit& audit, const std::string& what, const EmbedResult& r) {
  if (r.status == SearchStatus::Found) audit.pass(what, embed_json(r));
  else if (r.status == SearchStatus::Exhausted) audit.exhausted(what, embed_json(r));
  else audit.fail(what, embed_json(r));
}

std::string with_int(const std::string& s, int v) { return s + std::to_string(v); }

json sizes_json(const Tripartition& p) { return p.sizes(); }

// Semi-regularity, residue infeasibility, sampled type purity and the
// obstruction verdict for one no-factor tournament.
void audit_no_factor(Audit& audit, const Construction& t, const Pattern& pattern, int expected_n,
                     const VerifyConfig& cfg) {
  const OrientedGraph& g = t.graph;
  const int n = g.order();
  const int h = pattern.order();
  const auto profile = degree_profile(g);
  audit.expect(n == expected_n && is_tournament(g) && is_semiregular_tournament(g), "semi-regular tournament",
               {{"n", n}, {"min_semi_degree", profile.min_semi_degree}, {"part_sizes", sizes_json(t.parts)}});

  const auto rs = pattern.role_sizes();
  const auto sizes = t.parts.sizes();
  const Triple targets{sizes[0], sizes[1], sizes[2]};
  const auto sys = CongruenceSystem::abc(rs[0], rs[1], rs[2], targets);
  const auto sol = brute_force_solve(sys);
  audit.expect(!sol, "part-size residues unsolvable",
               {{"h", h},
                {"targets", triple_json(sys.targets)},
                {"solution", sol ? triple_json(*sol) : json(nullptr)}});

  const auto samples = sample_copies(pattern, g, &t.parts, cfg.samples, cfg.seed);
  std::array<std::size_t, 3> kinds{};
  const TileRecord* mixed = nullptr;
  for (const auto& s : samples.samples) {
    const auto kind = s.type ? s.type->kind : TileKind::Mixed;
    ++kinds[static_cast<std::size_t>(kind)];
    if (kind == TileKind::Mixed && !mixed) mixed = &s;
  }
  json detail = {{"requested", cfg.samples},
                 {"type", kinds[0]},
                 {"cross", kinds[1]},
                 {"mixed", kinds[2]},
                 {"failed", samples.failed}};
  if (mixed) {
    detail["copy"] = {{"vertices", detail::to_json(mixed->vertices)}, {"map", mixed->map}};
    audit.fail("sampled copies are Type or Cross", detail);
  } else if (samples.failed > 0) {
    audit.exhausted("sampled copies are Type or Cross", detail);
  } else {
    audit.pass("sampled copies are Type or Cross", detail);
  }

  const auto report = obstruction_report(g, pattern, t.parts, Tiling{{}, VertexSet(n)});
  const bool infeasible = !sol && kinds[2] == 0 && report.verdict == ObstructionVerdict::Infeasible;
  audit.expect(infeasible, "combined verdict Infeasible", detail::obstruction_json(report));
  audit.note("verdict", infeasible ? "Infeasible" : "Feasible");
}

// i -> j iff j - i is a non-zero square mod 7.
OrientedGraph quadratic_residue_7() {
  GraphBuilder b(7);
  for (int i = 0; i < 7; ++i)
    for (int d : {1, 2, 4}) b.add_edge(i, (i + d) % 7);
  return b.build();
}

OrientedGraph random_tournament(int n, std::mt19937_64& rng) {
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) (rng() & 1) ? b.add_edge(u, v) : b.add_edge(v, u);
  return b.build();
}

// Brute-force linking counts for round_tournament(7), C3, t = 1.
const std::uint64_t kRound7Linking[7][7] = {{0, 3, 1, 0, 0, 1, 3}, {3, 0, 3, 1, 0, 0, 1}, {1, 3, 0, 3, 1, 0, 0},
                                            {0, 1, 3, 0, 3, 1, 0}, {0, 0, 1, 3, 0, 3, 1}, {1, 0, 0, 1, 3, 0, 3},
                                            {3, 1, 0, 0, 1, 3, 0}};

}  // namespace

CheckResult check_turanable_noncontainment(const VerifyConfig& cfg) {
  Audit audit("turanable-noncontainment");
  auto h = turanable_noncontainment(1, 1, 2);
  // Mutation: drop the edge from w back to the source of the C class.
  if (cfg.mutate) h = without_edge(h, 4, 2);
  audit.note("graph", graph_json(h));
  for (int s = 1; s <= cfg.ds_max; ++s)
    expect_absent(audit, with_int("no embedding into D(s,s,s), s = ", s), embed(h, d_abc(s, s, s).graph, nullptr, cfg.budget));
  for (int n = 11; n <= 25; n += 2) {
    const auto host = round_tournament(n);
    const auto r = embed(h, host, nullptr, cfg.budget);
    if (r.status == SearchStatus::Found && !is_embedding(h, host, r.map)) {
      audit.fail(with_int("embeds in the round tournament, n = ", n), embed_json(r));
      continue;
    }
    expect_present(audit, with_int("embeds in the round tournament, n = ", n), r);
  }
  return audit.finish();
}

CheckResult check_square_exclusion(const VerifyConfig& cfg) {
  Audit audit("square-exclusion");
  const auto f1 = f_graph(1);
  const auto f2 = f_graph(2);
  audit.expect(f1.graph.order() == 9 && regular(f1.graph, 4), "F(1) is 4-regular on 9 vertices");
  audit.expect(f2.graph.order() == 18 && regular(f2.graph, 8), "F(2) is 8-regular on 18 vertices");
  for (int l : {5, 7, 8, 9})
    expect_absent(audit, with_int("F(1) has no square of C_l, l = ", l), contains_cycle_power(f1.graph, l, 2, cfg.budget));
  // The square of C_6 is the expected exception; the mutation forgets it.
  const auto c6 = contains_cycle_power(f1.graph, 6, 2, cfg.budget);
  if (cfg.mutate) expect_absent(audit, "F(1) has no square of C_6", c6);
  else expect_present(audit, "F(1) contains the square of C_6", c6);

  const auto p1 = square_excluder(1);
  audit.expect(p1.graph.order() == 8 && regular(p1.graph, 3), "excluder is 3-regular on 8 vertices");
  for (int l = 5; l <= 8; ++l)
    expect_absent(audit, with_int("excluder has no square of C_l, l = ", l), contains_cycle_power(p1.graph, l, 2, cfg.budget));
  const auto longest = longest_square_path_order(p1.graph, cfg.budget);
  const json lj = {{"order", longest.order}, {"witness", longest.witness}, {"exact", longest.exact}};
  if (!longest.exact) audit.exhausted("longest square of a path has order 6", lj);
  else audit.expect(longest.order == 6, "longest square of a path has order 6", lj);

  const auto p2 = square_excluder(2);
  expect_absent(audit, "blow-up t = 2 has no square of a 7-vertex path",
                embed(power(directed_path(7), 2), p2.graph, nullptr, cfg.budget));
  return audit.finish();
}

CheckResult check_abc_no_factor(int a, int b, int c, int k, const VerifyConfig& cfg) {
  Audit audit("abc-no-factor");
  audit.note("parameters", {a, b, c, k});
  // Mutation: skip the matching reversal.
  const auto t = cfg.mutate ? no_factor_tournament_abc_unmatched(a, b, c, k) : no_factor_tournament_abc(a, b, c, k);
  audit_no_factor(audit, t, d_abc(a, b, c), 6 * (a + b + c) * k, cfg);
  return audit.finish();
}

CheckResult check_1bc_no_factor(int b, int c, int k, const VerifyConfig& cfg) {
  Audit audit("1bc-no-factor");
  audit.note("parameters", {b, c, k});
  auto t = no_factor_tournament_1bc(b, c, k);
  if (cfg.mutate) {
    // Mutation: reverse one out-edge of a vertex of minimum out-degree.
    int u = 0;
    for (int v = 1; v < t.graph.order(); ++v)
      if (t.graph.out_degree(v) < t.graph.out_degree(u)) u = v;
    t.graph = with_reversed(t.graph, u, t.graph.out(u).first());
  }
  const int h = 1 + b + c;
  const auto expected = targets_1bc(b, c);
  const auto sizes = t.parts.sizes();
  audit.expect(residue(sizes[0], h) == residue(expected[0], h) && residue(sizes[1], h) == residue(expected[1], h),
               "part sizes realise the 1bc targets",
               {{"targets", triple_json(expected)}, {"part_sizes", sizes}, {"solvable", solvable_1bc(b, c, expected)}});
  audit_no_factor(audit, t, d_abc(1, b, c), (3 * k + 1) * h, cfg);
  return audit.finish();
}

CheckResult check_tiling_sharpness(int s, int t, const VerifyConfig& cfg) {
  Audit audit("tiling-sharpness");
  audit.note("parameters", {s, t});
  Construction g = sharpness_graph(s, t);
  if (cfg.mutate) {
    // Mutation: equal part sizes.
    const auto r = round_tournament(g.graph.order() / 3);
    g = c3_blowup_of(r, r, r);
  }
  const int n = g.graph.order();
  const auto c3 = directed_cycle(3);
  audit.note("part_sizes", sizes_json(g.parts));

  const auto f = has_factor(g.graph, c3, cfg.budget);
  const json fj = {{"status", factor_status_name(f.status)}, {"nodes", f.nodes}};
  if (f.status == FactorStatus::Exhausted) audit.exhausted("no C3-factor", fj);
  else if (f.status == FactorStatus::Yes) audit.fail("no C3-factor", {{"factor", tiling_json(f.tiling)}});
  else audit.pass("no C3-factor", fj);

  const auto m = max_tiling(g.graph, c3, cfg.budget, &g.parts);
  const int leftover = n - m.tiling.covered.count();
  const json mj = {{"covered", m.tiling.covered.count()},
                   {"leftover", leftover},
                   {"proven", m.optimality == Optimality::Proven},
                   {"nodes", m.nodes},
                   {"tiling", tiling_json(m.tiling)}};
  if (m.optimality != Optimality::Proven) audit.exhausted("maximum C3-tiling leaves exactly 6s - 3", mj);
  else audit.expect(leftover == 6 * s - 3, "maximum C3-tiling leaves exactly 6s - 3", mj);

  const auto sizes = g.parts.sizes();
  const auto plan = balancing_plan(1, 1, 1, {sizes[0], sizes[1], sizes[2]});
  audit.expect(!plan, "part sizes admit no balancing plan", {{"plan", plan ? triple_json(*plan) : json(nullptr)}});
  const auto report = obstruction_report(g.graph, c3, g.parts, m.tiling);
  audit.expect(report.verdict == ObstructionVerdict::Infeasible, "obstruction verdict Infeasible",
               detail::obstruction_json(report));
  return audit.finish();
}

CheckResult check_congruence_sweep(const VerifyConfig& cfg) {
  Audit audit("congruence-sweep");
  std::mt19937_64 rng(cfg.seed);
  std::size_t triples = 0, coprime = 0;
  bool ok = true;
  for (int h = 3; h <= cfg.h_max && ok; ++h) {
    for (int a = 1; 3 * a <= h && ok; ++a) {
      for (int b = a; a + 2 * b <= h && ok; ++b) {
        const int c = h - a - b;
        ++triples;
        const auto sys = CongruenceSystem::abc(a, b, c, {1, -1, 0});
        // Image of (x, y, z) -> rows * (x, y, z); rows sum to h(x+y+z), so the
        // image lies in the zero-sum triples, indexed by the first two rows.
        std::vector<char> image(static_cast<std::size_t>(h * h), 0);
        for (int x = 0; x < h; ++x)
          for (int y = 0; y < h; ++y)
            for (int z = 0; z < h; ++z) {
              const Triple v{x, y, z};
              image[static_cast<std::size_t>(sys.row_value(0, v) * h + sys.row_value(1, v))] = 1;
            }
        const bool all_zero_sum = std::all_of(image.begin(), image.end(), [](char c) { return c != 0; });
        const bool hits = image[static_cast<std::size_t>(1 * h + (h - 1))] != 0;
        const bool brute = brute_force_solve(sys).has_value();
        const bool closed = solvable_abc(a, b, c);
        const json where = {{"abc", {a, b, c}}, {"h", h}, {"delta", residues_abc(a, b, c).delta}};
        if (hits != closed || brute != closed || all_zero_sum != closed) {
          json w = where;
          w["image_hits_target"] = hits;
          w["brute_force"] = brute;
          w["all_zero_sum_targets"] = all_zero_sum;
          w["gcd_criterion"] = closed;
          audit.fail("solvability matches gcd(h, c^2 - ab) = 1", w);
          ok = false;
          break;
        }
        if (!closed) continue;
        ++coprime;
        auto sp = special_solution(a, b, c);
        // Mutation: drop the sign on y0.
        if (cfg.mutate) sp[1] = residue(-sp[1], h);
        if (!sys.satisfied_by(sp)) {
          json w = where;
          w["special_solution"] = triple_json(sp);
          audit.fail("special solution satisfies the system", w);
          ok = false;
          break;
        }
        std::uniform_int_distribution<int> pick(0, h - 1);
        for (int trial = 0; trial < 4; ++trial) {
          const Triple target{pick(rng), pick(rng), 0};
          const Triple zero_sum{target[0], target[1], residue(-target[0] - target[1], h)};
          const auto gs = general_solution(a, b, c, zero_sum);
          if (!CongruenceSystem::abc(a, b, c, zero_sum).satisfied_by(gs)) {
            json w = where;
            w["targets"] = triple_json(zero_sum);
            w["general_solution"] = triple_json(gs);
            audit.fail("general solution satisfies the system", w);
            ok = false;
            break;
          }
        }
      }
    }
  }
  if (ok) audit.pass("solvability matches gcd(h, c^2 - ab) = 1 and closed forms verify",
                     {{"h_max", cfg.h_max}, {"triples", triples}, {"coprime", coprime}});
  return audit.finish();
}

CheckResult check_tt_ramsey(const VerifyConfig& cfg) {
  Audit audit("tt-ramsey");
  const auto tt3 = transitive_tournament(3).graph;
  const auto tt4 = transitive_tournament(4).graph;
  int bad = -1;
  for (int mask = 0; mask < 64 && bad < 0; ++mask) {
    GraphBuilder b(4);
    int bit = 0;
    for (int u = 0; u < 4; ++u)
      for (int v = u + 1; v < 4; ++v, ++bit) ((mask >> bit) & 1) ? b.add_edge(v, u) : b.add_edge(u, v);
    const auto g = b.build();
    if (!is_embedding(tt3, g, find_tt(g, 3))) bad = mask;
  }
  audit.expect(bad < 0, "TT_3 in every labelled 4-vertex tournament", {{"tournaments", 64}, {"first_failure", bad}});

  std::mt19937_64 rng(cfg.seed);
  if (cfg.mutate) {
    // Mutation: seven vertices are too few; the residue tournament has no TT_4.
    const auto qr = quadratic_residue_7();
    const auto r = embed(tt4, qr, nullptr, cfg.budget);
    if (r.status == SearchStatus::Found) audit.pass("TT_4 in a 7-vertex tournament", embed_json(r));
    else audit.fail("TT_4 in a 7-vertex tournament", {{"tournament", graph_json(qr)}, {"status", status_name(r.status)}});
    return audit.finish();
  }
  const int trials = 10000;
  for (int i = 0; i < trials; ++i) {
    const auto g = random_tournament(8, rng);
    const auto map = find_tt(g, 4);
    if (!is_embedding(tt4, g, map)) {
      audit.fail("TT_4 in random 8-vertex tournaments", {{"tournament", graph_json(g)}, {"map", map}});
      return audit.finish();
    }
  }
  audit.pass("TT_4 in random 8-vertex tournaments", {{"tournaments", trials}, {"seed", cfg.seed}});
  return audit.finish();
}

CheckResult check_lattice_census(const VerifyConfig& cfg) {
  Audit audit("lattice-census");
  const auto f = f_graph(1);
  auto g = f.graph;
  // Mutation: one backward edge from V_2 to V_1.
  if (cfg.mutate) g = with_reversed(g, f.parts.part(0).first(), f.parts.part(1).first());
  const std::vector<VertexSet> parts{f.parts.part(0), f.parts.part(1), f.parts.part(2)};
  const auto c3 = directed_cycle(3);
  const auto robust = robust_vectors(g, c3, parts, 0, cfg.budget);
  json census = json::array();
  for (const auto& [v, count] : robust.census) census.push_back({{"vector", v}, {"copies", count}});
  const std::vector<IndexVector> expected{{0, 0, 3}, {0, 3, 0}, {1, 1, 1}, {3, 0, 0}};
  if (!robust.complete) audit.exhausted("robust set of F(1) is the four expected vectors", census);
  else audit.expect(robust.vectors == expected, "robust set of F(1) is the four expected vectors", {{"census", census}});
  const auto tr = find_2_transferral(robust);
  audit.expect(!tr, "no 2-transferral",
               tr ? json{{"i", tr->i}, {"j", tr->j}, {"v1", tr->v1}, {"v2", tr->v2}} : json::object());

  const auto m = reachability_matrix(round_tournament(7), c3, 1, cfg.budget);
  bool same = m.counts.size() == 7;
  for (std::size_t i = 0; i < 7 && same; ++i)
    for (std::size_t j = 0; j < 7 && same; ++j) same = m.counts[i][j] == kRound7Linking[i][j];
  if (!m.complete) audit.exhausted("round(7) linking counts match the stored fixture", {{"counts", m.counts}});
  else audit.expect(same, "round(7) linking counts match the stored fixture", {{"counts", m.counts}});
  return audit.finish();
}

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names{"turanable-noncontainment", "square-exclusion", "abc-no-factor",
                                              "1bc-no-factor", "tiling-sharpness", "congruence-sweep",
                                              "tt-ramsey", "lattice-census"};
  return names;
}

CheckResult run_check(const std::string& name, const VerifyConfig& cfg) {
  if (name == "turanable-noncontainment") return check_turanable_noncontainment(cfg);
  if (name == "square-exclusion") return check_square_exclusion(cfg);
  if (name == "abc-no-factor") return check_abc_no_factor(2, 2, 4, 1, cfg);
  if (name == "1bc-no-factor") return check_1bc_no_factor(4, 9, 1, cfg);
  if (name == "tiling-sharpness") return check_tiling_sharpness(1, 1, cfg);
  if (name == "congruence-sweep") return check_congruence_sweep(cfg);
  if (name == "tt-ramsey") return check_tt_ramsey(cfg);
  if (name == "lattice-census") return check_lattice_census(cfg);
  fail(ErrorCode::BadParameters, "unknown check: " + name);
}

std::vector<CheckResult> run_checks(const std::vector<std::string>& names, const VerifyConfig& cfg) {
  std::vector<std::string> expanded;
  for (const auto& n : names) {
    if (n == "all") expanded.insert(expanded.end(), check_names().begin(), check_names().end());
    else expanded.push_back(n);
  }
  std::vector<CheckResult> out;
  for (const auto& n : expanded) out.push_back(run_check(n, cfg));
  return out;
}

json to_json(const CheckResult& r, bool with_timing) {
  json j = {{"name", r.name}, {"verdict", verdict_name(r.verdict)}, {"evidence", r.evidence}};
  if (with_timing) j["elapsed_seconds"] = r.elapsed_seconds;
  return j;
}

json report_json(const std::vector<CheckResult>& results, bool with_timing) {
  json checks = json::array();
  bool pass = true;
  for (const auto& r : results) {
    checks.push_back(to_json(r, with_timing));
    pass = pass && r.verdict == CheckVerdict::Pass;
  }
  return {{"schema", 1}, {"checks", std::move(checks)}, {"pass", pass}};
}

}  // namespace dtile
