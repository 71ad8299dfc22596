#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "dtile/dtile.h"

namespace {

enum Exit { kOk = 0, kNegative = 1, kUsage = 2, kExhausted = 3 };

struct Failure {
  std::string msg;
};

// Owns a dtile_error and throws when a call left one behind.
struct Err {
  dtile_error e{DTILE_OK, nullptr};
  ~Err() { dtile_free_error_content(&e); }
  dtile_error* operator&() { return &e; }
  void check() {
    if (e.status != DTILE_OK) throw Failure{std::string(dtile_status_name(e.status)) + ": " + (e.msg ? e.msg : "")};
  }
};

using GraphPtr = std::unique_ptr<dtile_graph, decltype(&dtile_graph_free)>;
using PatternPtr = std::unique_ptr<dtile_pattern, decltype(&dtile_pattern_free)>;

std::uint64_t parse_budget(const std::string& text) {
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (end == text.c_str() || *end != '\0' || !std::isfinite(v) || v < 1 || v > 1.8e19 || v != std::floor(v))
    throw Failure{"budget must be a positive integer such as 1e7, got '" + text + "'"};
  return static_cast<std::uint64_t>(v);
}

std::vector<std::int64_t> parse_list(const std::string& text, const std::string& flag) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Failure{flag + ": expected comma-separated integers, got '" + text + "'"};
    }
  }
  return out;
}

GraphPtr load_graph(const std::string& path) {
  Err err;
  dtile_graph* g = nullptr;
  if (path == "-") {
    const std::string text{std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    g = dtile_graph_parse(text.c_str(), &err);
  } else {
    g = dtile_graph_read_file(path.c_str(), &err);
  }
  err.check();
  return GraphPtr(g, dtile_graph_free);
}

PatternPtr load_pattern(const std::string& spec) {
  Err err;
  dtile_pattern* p = dtile_pattern_parse(spec.c_str(), &err);
  err.check();
  return PatternPtr(p, dtile_pattern_free);
}

// Takes ownership of a library string.
std::string take(char* s, Err& err) {
  err.check();
  std::string out(s ? s : "");
  dtile_string_free(s);
  return out;
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream f(path);
  if (!f) throw Failure{"cannot write " + path};
  f << text;
  if (!text.empty() && text.back() != '\n') f << '\n';
}

struct Common {
  std::string budget;
  std::uint64_t seed = 1;
  int threads = 0;
  std::string output;
};

struct GenOptions {
  std::string family;
  int n = 0, t = 1, s = 1, k = 1;
  std::string abc, bc, out_degrees, pattern;
  std::string format = "edgelist";
};

int run_gen(const GenOptions& o, const Common& c) {
  Err err;
  dtile_graph* raw = nullptr;
  if (o.family == "pattern") {
    if (o.pattern.empty()) throw Failure{"gen pattern needs --pattern"};
    auto p = load_pattern(o.pattern);
    raw = dtile_pattern_graph(p.get(), &err);
  } else {
    std::vector<std::int64_t> params;
    const auto& f = o.family;
    auto need = [&](const std::string& v, const char* flag) {
      if (v.empty()) throw Failure{"gen " + f + " needs " + flag};
      return parse_list(v, flag);
    };
    if (f == "round") {
      params = {o.n};
      if (!o.out_degrees.empty()) {
        const auto d = parse_list(o.out_degrees, "--out-degrees");
        params.insert(params.end(), d.begin(), d.end());
      }
    } else if (f == "round-tournament") {
      params = {o.n};
    } else if (f == "f-graph" || f == "square-excluder") {
      params = {o.t};
    } else if (f == "turanable") {
      params = need(o.abc, "--abc");
    } else if (f == "abc-no-factor" || f == "abc-unmatched") {
      params = need(o.abc, "--abc");
      params.push_back(o.k);
    } else if (f == "1bc-no-factor") {
      params = need(o.bc, "--bc");
      params.push_back(o.k);
    } else if (f == "sharpness") {
      params = {o.s, o.t};
    }
    raw = dtile_generate(f.c_str(), params.data(), params.size(), &err);
  }
  err.check();
  GraphPtr g(raw, dtile_graph_free);
  Err werr;
  write_output(take(dtile_graph_write(g.get(), o.format.c_str(), &werr), werr), c.output);
  return kOk;
}

dtile_budget budget_of(const Common& c) {
  dtile_budget b = dtile_default_budget();
  std::string text = c.budget;
  if (text.empty())
    if (const char* env = std::getenv("DTILE_BUDGET")) text = env;
  if (!text.empty()) b.node_limit = b.copy_limit = parse_budget(text);
  return b;
}

nlohmann::json parse_json(const std::string& s) { return nlohmann::json::parse(s); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dtile: oriented graph tilings, constructions and checks"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_option("--budget", common.budget, "search node and copy limit (e.g. 1e7); default $DTILE_BUDGET or 1e7");
  app.add_option("--seed", common.seed, "seed for every randomised step");
  app.add_option("--threads", common.threads, "worker threads (0 = hardware)")->check(CLI::NonNegativeNumber);
  app.add_option("-o,--output", common.output, "output path (default stdout)");

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "generate a graph");
  gen_cmd->add_option("family", gen.family, "family")
      ->required()
      ->check(CLI::IsMember({"round", "round-tournament", "f-graph", "square-excluder", "turanable", "abc-no-factor",
                             "abc-unmatched", "1bc-no-factor", "sharpness", "pattern"}));
  gen_cmd->add_option("--n", gen.n, "vertex count");
  gen_cmd->add_option("--t", gen.t, "blow-up factor");
  gen_cmd->add_option("--s", gen.s, "sharpness parameter s");
  gen_cmd->add_option("--k", gen.k, "multiplier k");
  gen_cmd->add_option("--abc", gen.abc, "a,b,c");
  gen_cmd->add_option("--bc", gen.bc, "b,c");
  gen_cmd->add_option("--out-degrees", gen.out_degrees, "round digraph out-degrees d0,d1,...");
  gen_cmd->add_option("--pattern", gen.pattern, "pattern spec for the pattern family");
  gen_cmd->add_option("--format", gen.format, "edgelist, dot or json")
      ->check(CLI::IsMember({"edgelist", "dot", "json"}));

  std::string graph_path, pattern_spec;
  auto add_graph = [&](CLI::App* cmd) { cmd->add_option("-g,--graph", graph_path, "edge-list file, - for stdin")->required(); };
  auto add_pattern = [&](CLI::App* cmd) {
    cmd->add_option("-p,--pattern", pattern_spec, "dabc:a,b,c | tt:k | cyc:l | path:l | cycpow:l,k | pathpow:l,k | k4m")
        ->required();
  };

  auto* embed_cmd = app.add_subcommand("embed", "find a copy of a pattern");
  add_pattern(embed_cmd);
  add_graph(embed_cmd);

  auto* factor_cmd = app.add_subcommand("factor", "decide whether a pattern factor exists");
  add_pattern(factor_cmd);
  add_graph(factor_cmd);

  auto* tiling_cmd = app.add_subcommand("tiling", "maximum pattern tiling with obstruction report");
  add_pattern(tiling_cmd);
  add_graph(tiling_cmd);

  std::string abc, bc, targets, mode = "both";
  auto* cong_cmd = app.add_subcommand("congruence", "residue system for tile-type counts");
  auto* abc_opt = cong_cmd->add_option("--abc", abc, "a,b,c");
  auto* bc_opt = cong_cmd->add_option("--bc", bc, "b,c (a = 1, balanced targets)");
  abc_opt->excludes(bc_opt);
  cong_cmd->add_option("--targets", targets, "r1,r2,r3 (default 1,-1,0)");
  cong_cmd->add_option("--mode", mode, "closed-form, brute or both")
      ->check(CLI::IsMember({"closed-form", "closed", "brute", "both"}));

  std::uint64_t threshold = 0;
  int link_t = 0;
  auto* lattice_cmd = app.add_subcommand("lattice", "index-vector census, transferrals and linking counts");
  add_pattern(lattice_cmd);
  add_graph(lattice_cmd);
  lattice_cmd->add_option("--threshold", threshold, "robustness threshold");
  lattice_cmd->add_option("--t", link_t, "linking-set size factor; 0 skips the matrix");

  dtile_extremal_params ext = dtile_default_extremal_params();
  auto* ext_cmd = app.add_subcommand("extremal", "extremal-structure report");
  add_graph(ext_cmd);
  ext_cmd->add_option("--gamma", ext.gamma)->check(CLI::NonNegativeNumber);
  ext_cmd->add_option("--c1", ext.c1);
  ext_cmd->add_option("--c2", ext.c2);
  ext_cmd->add_option("--c3", ext.c3);
  ext_cmd->add_option("--slack", ext.slack, "good-vertex slack (default floor(c3 gamma n))");
  ext_cmd->add_option("--restarts", ext.restarts, "local-search restarts")->check(CLI::PositiveNumber);

  int l_min = 5, l_max = 0;
  auto* scan_cmd = app.add_subcommand("scan-squares", "squares of cycles and the longest square of a path");
  add_graph(scan_cmd);
  scan_cmd->add_option("--l-min", l_min);
  scan_cmd->add_option("--l-max", l_max, "default n");

  auto* count_cmd = app.add_subcommand("count", "directed-triangle and K4- counts");
  add_graph(count_cmd);

  std::vector<std::string> checks;
  std::string json_out;
  std::uint64_t samples = dtile_default_verify_config().samples;
  bool mutate = false;
  auto* verify_cmd = app.add_subcommand("verify", "run named verification checks");
  verify_cmd->add_option("--check", checks, std::string("check names or all: ") + dtile_check_names())
      ->delimiter(',')
      ->required();
  verify_cmd->add_option("--json", json_out, "write the JSON report here");
  verify_cmd->add_option("--samples", samples, "sampled copies per type-purity check")->check(CLI::PositiveNumber);
  verify_cmd->add_flag("--mutate", mutate, "apply each check's planted mutation");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    dtile_set_threads(common.threads);
    const dtile_budget budget = budget_of(common);
    Err err;

    if (*gen_cmd) return run_gen(gen, common);

    if (*embed_cmd) {
      auto p = load_pattern(pattern_spec);
      auto g = load_graph(graph_path);
      const auto out = take(dtile_embed_json(p.get(), g.get(), budget, &err), err);
      write_output(out, common.output);
      const auto status = parse_json(out)["status"].get<std::string>();
      return status == "found" ? kOk : status == "not-found" ? kNegative : kExhausted;
    }
    if (*factor_cmd) {
      auto p = load_pattern(pattern_spec);
      auto g = load_graph(graph_path);
      const auto out = take(dtile_factor_json(p.get(), g.get(), budget, &err), err);
      write_output(out, common.output);
      const auto status = parse_json(out)["status"].get<std::string>();
      return status == "yes" ? kOk : status == "no" ? kNegative : kExhausted;
    }
    if (*tiling_cmd) {
      auto p = load_pattern(pattern_spec);
      auto g = load_graph(graph_path);
      const auto out = take(dtile_tiling_json(p.get(), g.get(), budget, &err), err);
      write_output(out, common.output);
      return parse_json(out)["optimality"] == "proven" ? kOk : kExhausted;
    }
    if (*cong_cmd) {
      const std::string m = mode == "closed-form" ? "closed" : mode;
      std::string out;
      if (!abc.empty()) {
        const auto v = parse_list(abc, "--abc");
        if (v.size() != 3) throw Failure{"--abc takes three integers"};
        std::optional<std::vector<std::int64_t>> t;
        if (!targets.empty()) {
          t = parse_list(targets, "--targets");
          if (t->size() != 3) throw Failure{"--targets takes three integers"};
        }
        out = take(dtile_congruence_abc_json(v[0], v[1], v[2], t ? t->data() : nullptr, m.c_str(), &err), err);
      } else if (!bc.empty()) {
        const auto v = parse_list(bc, "--bc");
        if (v.size() != 2) throw Failure{"--bc takes two integers"};
        if (!targets.empty()) throw Failure{"--targets does not apply to --bc"};
        out = take(dtile_congruence_1bc_json(v[0], v[1], m.c_str(), &err), err);
      } else {
        throw Failure{"congruence needs --abc or --bc"};
      }
      write_output(out, common.output);
      const auto j = parse_json(out);
      bool ok = !j.contains("agree") || j["agree"].get<bool>();
      for (const char* key : {"closed_form", "brute_force"})
        if (j.contains(key)) ok = ok && j[key]["verified"].get<bool>();
      return ok ? kOk : kNegative;
    }
    if (*lattice_cmd) {
      auto p = load_pattern(pattern_spec);
      auto g = load_graph(graph_path);
      const auto out = take(dtile_lattice_json(p.get(), g.get(), threshold, link_t, budget, &err), err);
      write_output(out, common.output);
      const auto j = parse_json(out);
      const bool complete = j["complete"].get<bool>() &&
                            (!j.contains("linking_counts") || j["linking_counts"]["complete"].get<bool>());
      return complete ? kOk : kExhausted;
    }
    if (*ext_cmd) {
      ext.seed = common.seed;
      auto g = load_graph(graph_path);
      write_output(take(dtile_extremal_json(g.get(), &ext, &err), err), common.output);
      return kOk;
    }
    if (*scan_cmd) {
      auto g = load_graph(graph_path);
      const int hi = l_max > 0 ? l_max : dtile_graph_order(g.get());
      const auto out = take(dtile_scan_squares_json(g.get(), l_min, hi, budget, &err), err);
      write_output(out, common.output);
      return parse_json(out)["exhausted"].get<bool>() ? kExhausted : kOk;
    }
    if (*count_cmd) {
      auto g = load_graph(graph_path);
      write_output(take(dtile_count_json(g.get(), &err), err), common.output);
      return kOk;
    }
    if (*verify_cmd) {
      dtile_verify_config cfg = dtile_default_verify_config();
      cfg.budget = budget;
      cfg.seed = common.seed;
      cfg.samples = samples;
      cfg.mutate = mutate ? 1 : 0;
      std::string names;
      for (const auto& c : checks) names += (names.empty() ? "" : ",") + c;
      int pass = 0;
      const auto out = take(dtile_verify_json(names.c_str(), &cfg, 1, &pass, &err), err);
      if (!json_out.empty()) write_output(out, json_out);
      const auto j = parse_json(out);
      bool exhausted = false;
      for (const auto& c : j["checks"]) {
        std::cout << c["name"].get<std::string>() << ": " << c["verdict"].get<std::string>() << " ("
                  << c["elapsed_seconds"].get<double>() << " s)\n";
        exhausted = exhausted || c["verdict"] == "Exhausted";
        if (c["verdict"] == "Fail") std::cout << "  counterexample: " << c["evidence"]["counterexample"].dump() << '\n';
      }
      if (pass) return kOk;
      bool failed = false;
      for (const auto& c : j["checks"]) failed = failed || c["verdict"] == "Fail";
      return failed ? kNegative : (exhausted ? kExhausted : kNegative);
    }
  } catch (const Failure& f) {
    std::cerr << "dtile: " << f.msg << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "dtile: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
