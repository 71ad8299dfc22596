#include "dtile/dtile.h"

#include <cstdlib>
#include <cstring>
#include <sstream>

#include "dtile/congruence.hpp"
#include "dtile/constructions.hpp"
#include "dtile/error.hpp"
#include "dtile/extremal.hpp"
#include "dtile/lattice.hpp"
#include "dtile/parallel.hpp"
#include "dtile/patterns.hpp"
#include "dtile/search.hpp"
#include "dtile/tiling.hpp"
#include "dtile/verify.hpp"
#include "json_util.hpp"

using namespace dtile;
using nlohmann::json;
using detail::graph_json;
using detail::parts_json;
using detail::tiling_json;
using detail::triple_json;

struct dtile_graph {
  OrientedGraph graph;
  std::optional<std::vector<Role>> roles;
  std::optional<Tripartition> parts;
};

struct dtile_pattern {
  Pattern pattern;
};

namespace {

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void set_error(dtile_error* err, int status, const char* msg) {
  if (!err) return;
  std::free(err->msg);
  err->status = status;
  err->msg = dup(msg);
}

struct NullArgument {};

template <class T>
T& need(T* p) {
  if (!p) throw NullArgument{};
  return *p;
}

// Runs f, translating exceptions into err and the fallback value.
template <class R, class F>
R guard(dtile_error* err, R fallback, F&& f) {
  if (err) {
    std::free(err->msg);
    err->status = DTILE_OK;
    err->msg = nullptr;
  }
  try {
    return f();
  } catch (const Error& e) {
    set_error(err, static_cast<int>(e.code()) + 1, e.what());
  } catch (const NullArgument&) {
    set_error(err, DTILE_ERR_NULL_ARGUMENT, "null argument");
  } catch (const std::exception& e) {
    set_error(err, DTILE_ERR_INTERNAL, e.what());
  } catch (...) {
    set_error(err, DTILE_ERR_INTERNAL, "unknown failure");
  }
  return fallback;
}

SearchBudget to_budget(dtile_budget b) {
  if (b.node_limit == 0 || b.copy_limit == 0) fail(ErrorCode::BadParameters, "budget must be >= 1");
  return {b.node_limit, b.copy_limit};
}

int search_code(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found: return DTILE_FOUND;
    case SearchStatus::NotFound: return DTILE_NOT_FOUND;
    case SearchStatus::Exhausted: return DTILE_EXHAUSTED;
  }
  return DTILE_EXHAUSTED;
}

char* emit(json j) {
  j["schema"] = 1;
  return dup(j.dump(2));
}

const char* role_name(Role r) { return r == Role::A ? "A" : r == Role::B ? "B" : "C"; }

json graph_document(const dtile_graph& g) {
  json j = graph_json(g.graph);
  if (g.parts) j["parts"] = parts_json(*g.parts);
  if (g.roles) {
    json roles = json::array();
    for (Role r : *g.roles) roles.push_back(role_name(r));
    j["roles"] = std::move(roles);
  }
  return j;
}

dtile_graph* wrap(Construction c) { return new dtile_graph{std::move(c.graph), std::nullopt, std::move(c.parts)}; }
dtile_graph* wrap(OrientedGraph g) { return new dtile_graph{std::move(g), std::nullopt, std::nullopt}; }

json embed_json(const EmbedResult& r) {
  return {{"status", status_name(r.status)}, {"map", r.map}, {"nodes", r.nodes}};
}

json solution_json(const std::optional<Triple>& s) { return s ? triple_json(*s) : json(nullptr); }

void check_mode(const std::string& mode) {
  if (mode != "closed" && mode != "brute" && mode != "both") fail(ErrorCode::BadParameters, "mode is closed, brute or both");
}

}  // namespace

extern "C" {

const char* dtile_version(void) { return "1.0.0"; }

const char* dtile_status_name(int status) {
  if (status == DTILE_OK) return "Ok";
  if (status == DTILE_ERR_NULL_ARGUMENT) return "NullArgument";
  if (status == DTILE_ERR_INTERNAL) return "Internal";
  if (status > DTILE_OK && status < DTILE_ERR_NULL_ARGUMENT) return error_code_name(static_cast<ErrorCode>(status - 1));
  return "Unknown";
}

void dtile_free_error_content(dtile_error* err) {
  if (!err) return;
  std::free(err->msg);
  err->msg = nullptr;
  err->status = DTILE_OK;
}

void dtile_string_free(char* s) { std::free(s); }

void dtile_set_threads(int n) { set_thread_count(n < 0 ? 0 : n); }

dtile_budget dtile_default_budget(void) {
  const SearchBudget b;
  return {b.node_limit, b.copy_limit};
}

dtile_graph* dtile_graph_from_edges(int n, const int* edges, size_t edge_count, dtile_error* err) {
  return guard<dtile_graph*>(err, nullptr, [&] {
    if (edge_count > 0 && !edges) throw NullArgument{};
    std::vector<Edge> list;
    for (size_t i = 0; i < edge_count; ++i) list.push_back({edges[2 * i], edges[2 * i + 1]});
    return wrap(OrientedGraph::build(n, list));
  });
}

dtile_graph* dtile_graph_parse(const char* text, dtile_error* err) {
  return guard<dtile_graph*>(err, nullptr, [&] {
    auto doc = parse_edge_list(std::string(&need(text)));
    return new dtile_graph{std::move(doc.graph), std::move(doc.roles), std::move(doc.parts)};
  });
}

dtile_graph* dtile_graph_read_file(const char* path, dtile_error* err) {
  return guard<dtile_graph*>(err, nullptr, [&] {
    auto doc = read_edge_list_file(std::string(&need(path)));
    return new dtile_graph{std::move(doc.graph), std::move(doc.roles), std::move(doc.parts)};
  });
}

dtile_graph* dtile_generate(const char* family, const int64_t* params, size_t count, dtile_error* err) {
  return guard<dtile_graph*>(err, nullptr, [&]() -> dtile_graph* {
    const std::string f(&need(family));
    if (count > 0 && !params) throw NullArgument{};
    auto arg = [&](size_t i) {
      if (i >= count) fail(ErrorCode::BadParameters, f + ": missing parameter " + std::to_string(i + 1));
      return static_cast<int>(params[i]);
    };
    auto arity = [&](size_t k) {
      if (count != k) fail(ErrorCode::BadParameters, f + " takes " + std::to_string(k) + " parameters");
    };
    if (f == "round") {
      RoundSpec spec{arg(0), {}};
      for (size_t i = 1; i < count; ++i) spec.out_degrees.push_back(arg(i));
      return wrap(round_digraph(spec));
    }
    if (f == "round-tournament") return arity(1), wrap(round_tournament(arg(0)));
    if (f == "f-graph") return arity(1), wrap(f_graph(arg(0)));
    if (f == "square-excluder") return arity(1), wrap(square_excluder(arg(0)));
    if (f == "turanable") return arity(3), wrap(turanable_noncontainment(arg(0), arg(1), arg(2)));
    if (f == "abc-no-factor") return arity(4), wrap(no_factor_tournament_abc(arg(0), arg(1), arg(2), arg(3)));
    if (f == "abc-unmatched")
      return arity(4), wrap(no_factor_tournament_abc_unmatched(arg(0), arg(1), arg(2), arg(3)));
    if (f == "1bc-no-factor") return arity(3), wrap(no_factor_tournament_1bc(arg(0), arg(1), arg(2)));
    if (f == "sharpness") return arity(2), wrap(sharpness_graph(arg(0), arg(1)));
    fail(ErrorCode::BadParameters, "unknown family: " + f);
  });
}

void dtile_graph_free(dtile_graph* g) { delete g; }

int dtile_graph_order(const dtile_graph* g) { return g ? g->graph.order() : -1; }

size_t dtile_graph_edge_count(const dtile_graph* g) { return g ? g->graph.edge_count() : 0; }

int dtile_graph_has_parts(const dtile_graph* g) { return g && g->parts ? 1 : 0; }

int dtile_graph_set_parts(dtile_graph* g, const int* labels, int n, dtile_error* err) {
  return guard<int>(err, -1, [&] {
    auto& graph = need(g);
    if (n != graph.graph.order()) fail(ErrorCode::NotAPartition, "label count differs from the vertex count");
    if (n > 0 && !labels) throw NullArgument{};
    std::vector<int> l(labels, labels + n);
    for (int x : l)
      if (x < 0 || x > 2) fail(ErrorCode::NotAPartition, "labels must be 0, 1 or 2");
    graph.parts = Tripartition::from_labels(l);
    return 0;
  });
}

char* dtile_graph_write(const dtile_graph* g, const char* format, dtile_error* err) {
  return guard<char*>(err, nullptr, [&] {
    const auto& graph = need(g);
    const std::string f(&need(format));
    const Tripartition* parts = graph.parts ? &*graph.parts : nullptr;
    if (f == "edgelist") return dup(write_edge_list(graph.graph, graph.roles ? &*graph.roles : nullptr, parts));
    if (f == "dot") return dup(write_dot(graph.graph, parts));
    if (f == "json") return emit(graph_document(graph));
    fail(ErrorCode::BadParameters, "format is edgelist, dot or json");
  });
}

dtile_pattern* dtile_pattern_parse(const char* spec, dtile_error* err) {
  return guard<dtile_pattern*>(err, nullptr, [&] { return new dtile_pattern{parse_pattern(std::string(&need(spec)))}; });
}

void dtile_pattern_free(dtile_pattern* p) { delete p; }

int dtile_pattern_order(const dtile_pattern* p) { return p ? p->pattern.order() : -1; }

dtile_graph* dtile_pattern_graph(const dtile_pattern* p, dtile_error* err) {
  return guard<dtile_graph*>(err, nullptr, [&] {
    const auto& pat = need(p).pattern;
    return new dtile_graph{pat.graph, pat.roles, std::nullopt};
  });
}

int dtile_embed(const dtile_pattern* p, const dtile_graph* g, dtile_budget budget, int* map, size_t capacity,
                dtile_error* err) {
  return guard<int>(err, -1, [&] {
    const auto r = embed(need(p).pattern, need(g).graph, nullptr, to_budget(budget));
    if (r.status == SearchStatus::Found && map && capacity >= r.map.size())
      std::copy(r.map.begin(), r.map.end(), map);
    return search_code(r.status);
  });
}

int dtile_has_factor(const dtile_pattern* p, const dtile_graph* g, dtile_budget budget, dtile_error* err) {
  return guard<int>(err, -1, [&] {
    const auto r = has_factor(need(g).graph, need(p).pattern, to_budget(budget));
    return r.status == FactorStatus::Yes ? DTILE_FOUND : r.status == FactorStatus::No ? DTILE_NOT_FOUND : DTILE_EXHAUSTED;
  });
}

int dtile_congruence_solve(int64_t a, int64_t b, int64_t c, const int64_t* targets, int brute, int64_t* out,
                           dtile_error* err) {
  return guard<int>(err, -1, [&] {
    const Triple t{need(targets), targets[1], targets[2]};
    const auto sys = CongruenceSystem::abc(a, b, c, t);
    std::optional<Triple> s;
    if (brute) {
      s = brute_force_solve(sys);
    } else if (solvable_abc(a, b, c) && residue(t[0] + t[1] + t[2], sys.h) == 0) {
      s = general_solution(a, b, c, t);
    }
    if (s && out) std::copy(s->begin(), s->end(), out);
    return s ? 1 : 0;
  });
}

char* dtile_embed_json(const dtile_pattern* p, const dtile_graph* g, dtile_budget budget, dtile_error* err) {
  return guard<char*>(err, nullptr, [&] {
    const auto& pat = need(p).pattern;
    const auto& host = need(g).graph;
    const auto r = embed(pat, host, nullptr, to_budget(budget));
    json j = embed_json(r);
    j["pattern"] = pat.name;
    if (r.status == SearchStatus::Found) j["verified"] = is_embedding(pat.graph, host, r.map);
    return emit(std::move(j));
  });
}

char* dtile_find_tt_json(const dtile_graph* g, int k, dtile_error* err) {
  return guard<char*>(err, nullptr, [&] {
    const auto& host = need(g).graph;
    const auto map = find_tt(host, k);
    return emit({{"k", k},
                 {"map", map},
                 {"verified", is_embedding(transitive_tournament(k).graph, host, map)}});
  });
}

char* dtile_scan_squares_json(const dtile_graph* g, int l_min, int l_max, dtile_budget budget, dtile_error* err) {
  return guard<char*>(err, nullptr, [&] {
    const auto& host = need(g).graph;
    const auto b = to_budget(budget);
    if (l_min < 5 || l_max < l_min) fail(ErrorCode::BadParameters, "need 5 <= l_min <= l_max");
    json cycles = json::array();
    bool exhausted = false;
    for (int l = l_min; l <= l_max; ++l) {
      const auto r = contains_cycle_power(host, l, 2, b);
      json c = embed_json(r);
      c["l"] = l;
      exhausted = exhausted || r.status == SearchStatus::Exhausted;
      cycles.push_back(std::move(c));
    }
    const auto path = longest_square_path_order(host, b);
    exhausted = exhausted || !path.exact;
    return emit({{"cycle_squares", std::move(cycles)},
                 {"longest_square_path", {{"order", path.order}, {"witness", path.witness}, {"exact", path.exact}}},
                 {"exhausted", exhausted}});
  });
}

char* dtile_count_json(const dtile_graph* g, dtile_error* err) {
  return guard<char*>(err, nullptr, [&] {
    const auto& graph = need(g);
    const auto all = graph.graph.all();
    json j = {{"cyc", cyc_count(graph.graph, all, all, all)}, {"k4m", k4m_count(graph.graph, all, all, all, all)}};
    if (graph.parts) {
      const auto& p = *graph.parts;
      json per = json::array();
      for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k)
          for (int l = 0; l < 3; ++l)
            if (auto c = cyc_count(graph.graph, p.part(i), p.part(k), p.part(l)); c > 0)
              per.push_back({{"parts", {i, k, l}}, {"count", c}});
      j["cyc_by_parts"] = std::move(per);
    }
    return emit(std::move(j));
  });
}

char* dtile_factor_json(const dtile_pattern* p, const dtile_graph* g, dtile_budget budget, dtile_error* err) {
  return guard<char*>(err, nullptr, [&] {
    const auto& pat = need(p).pattern;
    const auto& graph = need(g);
    const auto r = has_factor(graph.graph, pat, to_budget(budget), graph.parts ? &*graph.parts : nullptr);
    json j = {{"pattern", pat.name}, {"status", factor_status_name(r.status)}, {"nodes", r.nodes}};
    if (r.status == FactorStatus::Yes) {
      j["factor"] = tiling_json(r.tiling);
      j["verified"] = verify_tiling(graph.graph, pat, r.tiling);
    }
    return emit(std::move(j));
  });
}

char* dtile_tiling_json(const dtile_pattern* p, const dtile_graph* g, dtile_budget budget, dtile_error* err) {
  return guard<char*>(err, nullptr, [&] {
    const auto& pat = need(p).pattern;
    const auto& graph = need(g);
    const Tripartition* parts = graph.parts ? &*graph.parts : nullptr;
    const auto r = max_tiling(graph.graph, pat, to_budget(budget), parts);
    json j = {{"pattern", pat.name},
              {"optimality", r.optimality == Optimality::Proven ? "proven" : "budget-bound"},
              {"covered", r.tiling.covered.count()},
              {"uncovered", graph.graph.order() - r.tiling.covered.count()},
              {"nodes", r.nodes},
              {"tiling", tiling_json(r.tiling)},
              {"verified", verify_tiling(graph.graph, pat, r.tiling)}};
    if (parts && pat.roles) j["obstruction"] = detail::obstruction_json(obstruction_report(graph.graph, pat, *parts, r.tiling));
    return emit(std::move(j));
  });
}

char* dtile_congruence_abc_json(int64_t a, int64_t b, int64_t c, const int64_t* targets, const char* mode,
                                dtile_error* err) {
  return guard<char*>(err, nullptr, [&] {
    const std::string m = mode ? mode : "both";
    check_mode(m);
    const Triple t = targets ? Triple{targets[0], targets[1], targets[2]} : Triple{1, -1, 0};
    const auto sys = CongruenceSystem::abc(a, b, c, t);
    const auto res = residues_abc(a, b, c);
    const bool coprime = solvable_abc(a, b, c);
    const bool zero_sum = residue(t[0] + t[1] + t[2], sys.h) == 0;
    json j = {{"abc", {a, b, c}},
              {"h", sys.h},
              {"delta", res.delta},
              {"gcd", res.g},
              {"targets", triple_json(sys.targets)},
              {"gcd_criterion", coprime}};
    std::optional<bool> closed_ok, brute_ok;
    if (m != "brute") {
      std::optional<Triple> s;
      if (coprime && zero_sum) s = general_solution(a, b, c, t);
      j["closed_form"] = {{"solution", solution_json(s)}, {"verified", s ? sys.satisfied_by(*s) : true}};
      closed_ok = s.has_value();
    }
    if (m != "closed") {
      const auto s = brute_force_solve(sys);
      j["brute_force"] = {{"solution", solution_json(s)}, {"verified", s ? sys.satisfied_by(*s) : true}};
      brute_ok = s.has_value();
    }
    j["solvable"] = closed_ok ? *closed_ok : *brute_ok;
    if (closed_ok && brute_ok) j["agree"] = *closed_ok == *brute_ok;
    return emit(std::move(j));
  });
}

char* dtile_congruence_1bc_json(int64_t b, int64_t c, const char* mode, dtile_error* err) {
  return guard<char*>(err, nullptr, [&] {
    const std::string m = mode ? mode : "both";
    check_mode(m);
    const auto t = targets_1bc(b, c);
    const auto sys = CongruenceSystem::abc(1, b, c, t);
    json j = {{"bc", {b, c}}, {"h", sys.h}, {"targets", triple_json(t)}};
    const auto s = brute_force_solve(sys);
    if (m != "brute") j["gcd_criterion"] = solvable_abc(1, b, c);
    j["brute_force"] = {{"solution", solution_json(s)}, {"verified", s ? sys.satisfied_by(*s) : true}};
    j["solvable"] = solvable_1bc(b, c, t);
    return emit(std::move(j));
  });
}

char* dtile_lattice_json(const dtile_pattern* p, const dtile_graph* g, uint64_t threshold, int t, dtile_budget budget,
                         dtile_error* err) {
  return guard<char*>(err, nullptr, [&] {
    const auto& pat = need(p).pattern;
    const auto& graph = need(g);
    if (!graph.parts) fail(ErrorCode::NotAPartition, "lattice needs a three-part frame");
    const auto b = to_budget(budget);
    const std::vector<VertexSet> parts{graph.parts->part(0), graph.parts->part(1), graph.parts->part(2)};
    const auto robust = robust_vectors(graph.graph, pat, parts, threshold, b);
    json census = json::array();
    for (const auto& [v, count] : robust.census) census.push_back({{"vector", v}, {"copies", count}});
    const auto basis = lattice_basis(robust.vectors, 3);
    const auto tr = find_2_transferral(robust);
    json j = {{"pattern", pat.name},
              {"threshold", threshold},
              {"census", std::move(census)},
              {"robust", robust.vectors},
              {"complete", robust.complete},
              {"basis", basis.rows()}};
    j["transferral"] = tr ? json{{"i", tr->i}, {"j", tr->j}, {"v1", tr->v1}, {"v2", tr->v2}} : json(nullptr);
    if (t > 0) {
      const auto m = reachability_matrix(graph.graph, pat, t, b);
      j["linking_counts"] = {{"t", t}, {"counts", m.counts}, {"complete", m.complete}};
    }
    return emit(std::move(j));
  });
}

dtile_extremal_params dtile_default_extremal_params(void) { return {0.0, 1.0, 1.0, 1.0, -1, 8, 1}; }

char* dtile_extremal_json(const dtile_graph* g, const dtile_extremal_params* params, dtile_error* err) {
  return guard<char*>(err, nullptr, [&] {
    const auto& graph = need(g);
    const auto& prm = need(params);
    const ExtremalParams ep{prm.gamma, prm.c1, prm.c2, prm.c3};
    validate(ep);
    json j;
    Tripartition parts;
    if (graph.parts) {
      parts = *graph.parts;
      j["partition_source"] = "input";
    } else {
      const auto found = best_tripartition(graph.graph, prm.restarts, prm.seed);
      parts = found.parts;
      j["partition_source"] = "local-search";
      j["search"] = {{"best_restart", found.best_restart},
                     {"backward", found.backward},
                     {"moves", found.trail.size() - 1},
                     {"reassigned", found.reassigned}};
    }
    const auto s = is_superextremal(graph.graph, parts, ep);
    const int n = graph.graph.order();
    const int slack = prm.slack >= 0 ? prm.slack : static_cast<int>(prm.c3 * prm.gamma * n);
    const auto bad = graph.graph.all() - good_vertices(graph.graph, parts, slack);
    json sizes = json::array();
    json backward = json::array();
    for (const auto& d : s.extremal.parts) {
      sizes.push_back(d.size);
      backward.push_back(d.backward_edges);
    }
    j["parts"] = parts_json(parts);
    j["part_sizes"] = std::move(sizes);
    j["backward_edges"] = std::move(backward);
    j["edge_matrix"] = s.extremal.edge_matrix;
    j["extremal"] = s.extremal.extremal;
    j["superextremal"] = s.superextremal;
    j["size_slack"] = s.extremal.size_slack;
    j["edge_slack"] = s.extremal.edge_slack;
    j["degree_threshold"] = s.degree_threshold;
    j["offending"] = s.offending;
    j["good_slack"] = slack;
    j["bad_vertices"] = detail::to_json(bad);
    return emit(std::move(j));
  });
}

dtile_verify_config dtile_default_verify_config(void) {
  const VerifyConfig c;
  return {{c.budget.node_limit, c.budget.copy_limit}, c.seed, c.samples, 0};
}

char* dtile_verify_json(const char* names, const dtile_verify_config* cfg, int with_timing, int* all_pass,
                        dtile_error* err) {
  return guard<char*>(err, nullptr, [&] {
    const auto& c = need(cfg);
    VerifyConfig vc;
    vc.budget = to_budget(c.budget);
    vc.seed = c.seed;
    vc.samples = static_cast<std::size_t>(c.samples);
    vc.mutate = c.mutate != 0;
    std::vector<std::string> list;
    std::stringstream ss(std::string(&need(names)));
    for (std::string item; std::getline(ss, item, ',');)
      if (!item.empty()) list.push_back(item);
    if (list.empty()) fail(ErrorCode::BadParameters, "no checks named");
    const auto results = run_checks(list, vc);
    auto j = report_json(results, with_timing != 0);
    if (all_pass) *all_pass = j["pass"].get<bool>() ? 1 : 0;
    return dup(j.dump(2));
  });
}

const char* dtile_check_names(void) {
  static const std::string joined = [] {
    std::string s;
    for (const auto& n : check_names()) s += (s.empty() ? "" : ",") + n;
    return s;
  }();
  return joined.c_str();
}

}  // extern "C"
