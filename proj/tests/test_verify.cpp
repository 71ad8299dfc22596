#include <gtest/gtest.h>

#include "dtile/error.hpp"
#include "dtile/verify.hpp"

using namespace dtile;

namespace {

VerifyConfig quick() {
  VerifyConfig cfg;
  cfg.samples = 2000;
  cfg.h_max = 12;
  return cfg;
}

class EveryCheck : public ::testing::TestWithParam<std::string> {};

}  // namespace

TEST_P(EveryCheck, HealthyPasses) {
  const auto r = run_check(GetParam(), quick());
  EXPECT_EQ(r.verdict, CheckVerdict::Pass) << to_json(r).dump(1);
  EXPECT_EQ(r.name, GetParam());
  EXPECT_FALSE(r.evidence.contains("counterexample"));
}

TEST_P(EveryCheck, MutationFails) {
  auto cfg = quick();
  cfg.mutate = true;
  const auto r = run_check(GetParam(), cfg);
  EXPECT_EQ(r.verdict, CheckVerdict::Fail) << to_json(r).dump(1);
  ASSERT_TRUE(r.evidence.contains("counterexample"));
  EXPECT_TRUE(r.evidence["counterexample"].contains("witness"));
}

INSTANTIATE_TEST_SUITE_P(Suite, EveryCheck, ::testing::ValuesIn(check_names()),
                         [](const auto& info) {
                           std::string s = info.param;
                           for (auto& ch : s)
                             if (ch == '-') ch = '_';
                           return s;
                         });

TEST(Verify, ReportShape) {
  const auto rs = run_checks({"congruence-sweep", "tt-ramsey"}, quick());
  const auto j = report_json(rs);
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["checks"].size(), 2u);
  EXPECT_TRUE(j["pass"].get<bool>());
  EXPECT_EQ(run_checks({"all"}, quick()).size(), check_names().size());
  EXPECT_THROW(run_check("nope", quick()), Error);
}

TEST(Verify, Reproducible) {
  const auto cfg = quick();
  const auto a = report_json(run_checks({"abc-no-factor", "lattice-census"}, cfg), false);
  const auto b = report_json(run_checks({"abc-no-factor", "lattice-census"}, cfg), false);
  EXPECT_EQ(a, b);
}

TEST(Verify, CongruenceMutationHitsFirstCoprimeTriple) {
  auto cfg = quick();
  cfg.mutate = true;
  const auto r = check_congruence_sweep(cfg);
  ASSERT_EQ(r.verdict, CheckVerdict::Fail);
  // (1,1,2) is coprime but its y0 = 2 is its own negative mod 4, so the first
  // triple the mutation breaks is (1,1,3).
  EXPECT_EQ(r.evidence["counterexample"]["witness"]["abc"], (nlohmann::json{1, 1, 3}));
}

TEST(Verify, RejectsBadFixtures) {
  EXPECT_THROW(check_abc_no_factor(1, 2, 4, 1, quick()), Error);
  EXPECT_THROW(check_1bc_no_factor(1, 1, 1, quick()), Error);
}
