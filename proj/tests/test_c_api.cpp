#include <gtest/gtest.h>

#include <json.hpp>

#include <string>

#include "dtile/dtile.h"

using nlohmann::json;

namespace {

struct Err {
  dtile_error e{DTILE_OK, nullptr};
  ~Err() { dtile_free_error_content(&e); }
};

std::string take(char* s) {
  std::string out(s ? s : "");
  dtile_string_free(s);
  return out;
}

dtile_graph* gen(const char* family, std::initializer_list<std::int64_t> params) {
  std::vector<std::int64_t> p(params);
  Err err;
  auto* g = dtile_generate(family, p.data(), p.size(), &err.e);
  EXPECT_EQ(err.e.status, DTILE_OK) << (err.e.msg ? err.e.msg : "");
  return g;
}

dtile_pattern* pattern(const char* spec) {
  Err err;
  auto* p = dtile_pattern_parse(spec, &err.e);
  EXPECT_EQ(err.e.status, DTILE_OK);
  return p;
}

}  // namespace

TEST(CApi, ErrorsCarryCodeAndMessage) {
  Err err;
  const int edges[] = {0, 1, 1, 0};
  EXPECT_EQ(dtile_graph_from_edges(2, edges, 2, &err.e), nullptr);
  EXPECT_EQ(err.e.status, DTILE_ERR_TWO_CYCLE);
  ASSERT_NE(err.e.msg, nullptr);
  EXPECT_STREQ(dtile_status_name(err.e.status), "TwoCycle");
  dtile_free_error_content(&err.e);
  EXPECT_EQ(err.e.msg, nullptr);
  EXPECT_EQ(err.e.status, DTILE_OK);

  EXPECT_EQ(dtile_generate("nope", nullptr, 0, &err.e), nullptr);
  EXPECT_EQ(err.e.status, DTILE_ERR_BAD_PARAMETERS);
  EXPECT_EQ(dtile_pattern_parse(nullptr, &err.e), nullptr);
  EXPECT_EQ(err.e.status, DTILE_ERR_NULL_ARGUMENT);
  const std::int64_t bad[] = {1, 1, 1};
  EXPECT_EQ(dtile_generate("1bc-no-factor", bad, 3, &err.e), nullptr);
  EXPECT_EQ(err.e.status, DTILE_ERR_DIVISIBLE_BY_THREE);
  // A null error pointer is allowed.
  EXPECT_EQ(dtile_generate("nope", nullptr, 0, nullptr), nullptr);
}

TEST(CApi, GraphRoundTrip) {
  auto* g = gen("f-graph", {1});
  ASSERT_NE(g, nullptr);
  EXPECT_EQ(dtile_graph_order(g), 9);
  EXPECT_EQ(dtile_graph_edge_count(g), 36u);
  EXPECT_TRUE(dtile_graph_has_parts(g));
  Err err;
  const auto text = take(dtile_graph_write(g, "edgelist", &err.e));
  auto* back = dtile_graph_parse(text.c_str(), &err.e);
  ASSERT_NE(back, nullptr);
  EXPECT_EQ(take(dtile_graph_write(back, "edgelist", &err.e)), text);
  const auto j = json::parse(take(dtile_graph_write(back, "json", &err.e)));
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["n"], 9);
  EXPECT_EQ(j["edges"].size(), 36u);
  EXPECT_EQ(j["parts"][0], (json{0, 1, 2}));
  EXPECT_NE(take(dtile_graph_write(g, "dot", &err.e)).find("digraph"), std::string::npos);
  EXPECT_EQ(dtile_graph_write(g, "png", &err.e), nullptr);
  dtile_graph_free(back);
  dtile_graph_free(g);
}

TEST(CApi, SetParts) {
  const int edges[] = {0, 1, 1, 2, 2, 0};
  Err err;
  auto* g = dtile_graph_from_edges(3, edges, 3, &err.e);
  EXPECT_FALSE(dtile_graph_has_parts(g));
  const int labels[] = {0, 1, 2};
  EXPECT_EQ(dtile_graph_set_parts(g, labels, 2, &err.e), -1);
  EXPECT_EQ(err.e.status, DTILE_ERR_NOT_A_PARTITION);
  EXPECT_EQ(dtile_graph_set_parts(g, labels, 3, &err.e), 0);
  EXPECT_TRUE(dtile_graph_has_parts(g));
  dtile_graph_free(g);
}

TEST(CApi, TypedQueries) {
  auto* r5 = gen("round-tournament", {5});
  auto* c3 = pattern("cyc:3");
  int map[3] = {-1, -1, -1};
  Err err;
  EXPECT_EQ(dtile_embed(c3, r5, dtile_default_budget(), map, 3, &err.e), DTILE_FOUND);
  EXPECT_EQ((std::vector<int>{map[0], map[1], map[2]}), (std::vector<int>{0, 1, 3}));
  EXPECT_EQ(dtile_embed(c3, r5, dtile_budget{0, 1}, map, 3, &err.e), -1);
  EXPECT_EQ(err.e.status, DTILE_ERR_BAD_PARAMETERS);

  auto* tt4 = pattern("tt:4");
  auto* tt3 = pattern("tt:3");
  EXPECT_EQ(dtile_embed(tt4, r5, dtile_default_budget(), nullptr, 0, &err.e), DTILE_NOT_FOUND);
  EXPECT_EQ(dtile_embed(tt3, r5, dtile_budget{1, 1}, nullptr, 0, &err.e), DTILE_EXHAUSTED);

  auto* sharp = gen("sharpness", {1, 1});
  EXPECT_EQ(dtile_has_factor(c3, sharp, dtile_default_budget(), &err.e), DTILE_NOT_FOUND);
  auto* r9 = gen("round-tournament", {9});
  EXPECT_EQ(dtile_has_factor(c3, r9, dtile_default_budget(), &err.e), DTILE_FOUND);

  for (auto* g : {r5, sharp, r9}) dtile_graph_free(g);
  for (auto* p : {c3, tt4, tt3}) dtile_pattern_free(p);
}

TEST(CApi, Congruence) {
  Err err;
  const std::int64_t t[] = {1, -1, 0};
  std::int64_t out[3] = {};
  EXPECT_EQ(dtile_congruence_solve(1, 1, 2, t, 0, out, &err.e), 1);
  EXPECT_EQ((std::vector<std::int64_t>(out, out + 3)), (std::vector<std::int64_t>{1, 2, 0}));
  EXPECT_EQ(dtile_congruence_solve(1, 1, 2, t, 1, out, &err.e), 1);
  EXPECT_EQ((std::vector<std::int64_t>(out, out + 3)), (std::vector<std::int64_t>{0, 1, 3}));
  EXPECT_EQ(dtile_congruence_solve(2, 2, 4, t, 0, out, &err.e), 0);
  EXPECT_EQ(dtile_congruence_solve(2, 2, 4, t, 1, out, &err.e), 0);
  EXPECT_EQ(dtile_congruence_solve(0, 1, 1, t, 1, out, &err.e), -1);

  const auto j = json::parse(take(dtile_congruence_abc_json(1, 1, 2, nullptr, "both", &err.e)));
  EXPECT_TRUE(j["agree"].get<bool>());
  EXPECT_EQ(j["closed_form"]["solution"], (json{1, 2, 0}));
  EXPECT_EQ(j["brute_force"]["solution"], (json{0, 1, 3}));
  const auto k = json::parse(take(dtile_congruence_1bc_json(4, 9, "brute", &err.e)));
  EXPECT_EQ(k["targets"], (json{5, 4, 5}));
  EXPECT_FALSE(k["solvable"].get<bool>());
  EXPECT_EQ(dtile_congruence_abc_json(1, 1, 2, nullptr, "fast", &err.e), nullptr);
}

TEST(CApi, LatticeAndExtremal) {
  Err err;
  auto* f = gen("f-graph", {1});
  auto* c3 = pattern("cyc:3");
  const auto j = json::parse(take(dtile_lattice_json(c3, f, 0, 1, dtile_default_budget(), &err.e)));
  EXPECT_EQ(j["robust"], (json{{0, 0, 3}, {0, 3, 0}, {1, 1, 1}, {3, 0, 0}}));
  EXPECT_TRUE(j["transferral"].is_null());
  EXPECT_EQ(j["linking_counts"]["counts"].size(), 9u);

  auto* r7 = gen("round-tournament", {7});
  EXPECT_EQ(dtile_lattice_json(c3, r7, 0, 0, dtile_default_budget(), &err.e), nullptr);
  EXPECT_EQ(err.e.status, DTILE_ERR_NOT_A_PARTITION);

  auto* t = gen("abc-no-factor", {2, 2, 4, 1});
  auto params = dtile_default_extremal_params();
  params.gamma = 0.05;
  params.slack = 0;
  const auto e = json::parse(take(dtile_extremal_json(t, &params, &err.e)));
  EXPECT_TRUE(e["superextremal"].get<bool>());
  EXPECT_EQ(e["bad_vertices"].size(), 16u);
  EXPECT_EQ(e["partition_source"], "input");
  params.gamma = -1;
  EXPECT_EQ(dtile_extremal_json(t, &params, &err.e), nullptr);

  for (auto* g : {f, r7, t}) dtile_graph_free(g);
  dtile_pattern_free(c3);
}

TEST(CApi, Verify) {
  Err err;
  auto cfg = dtile_default_verify_config();
  int pass = -1;
  const auto j = json::parse(take(dtile_verify_json("congruence-sweep,tt-ramsey", &cfg, 0, &pass, &err.e)));
  EXPECT_EQ(pass, 1);
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["checks"].size(), 2u);
  cfg.mutate = 1;
  take(dtile_verify_json("congruence-sweep", &cfg, 0, &pass, &err.e));
  EXPECT_EQ(pass, 0);
  EXPECT_EQ(dtile_verify_json("nope", &cfg, 0, &pass, &err.e), nullptr);
  EXPECT_NE(std::string(dtile_check_names()).find("lattice-census"), std::string::npos);
}
