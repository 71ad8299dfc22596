#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "dtile/search.hpp"

namespace dtile {

enum class CheckVerdict { Pass, Fail, Exhausted };
const char* verdict_name(CheckVerdict v);

struct CheckResult {
  std::string name;
  CheckVerdict verdict = CheckVerdict::Pass;
  /// Certificates per sub-assertion; a Fail carries a "counterexample" object.
  nlohmann::json evidence;
  double elapsed_seconds = 0;
};

struct VerifyConfig {
  SearchBudget budget;
  std::uint64_t seed = 1;
  std::size_t samples = 100000;  // sampled copies per type-purity check
  int ds_max = 3;                // largest s for the D(s,s,s) hosts
  int h_max = 24;                // congruence sweep bound
  /// Apply each check's planted mutation; a healthy check then fails.
  bool mutate = false;
};

CheckResult check_turanable_noncontainment(const VerifyConfig& cfg);
CheckResult check_square_exclusion(const VerifyConfig& cfg);
/// Throws BadParameters when the construction hypotheses fail.
CheckResult check_abc_no_factor(int a, int b, int c, int k, const VerifyConfig& cfg);
CheckResult check_1bc_no_factor(int b, int c, int k, const VerifyConfig& cfg);
CheckResult check_tiling_sharpness(int s, int t, const VerifyConfig& cfg);
CheckResult check_congruence_sweep(const VerifyConfig& cfg);
CheckResult check_tt_ramsey(const VerifyConfig& cfg);
CheckResult check_lattice_census(const VerifyConfig& cfg);

/// Names accepted by run_check, in suite order.
const std::vector<std::string>& check_names();
/// Runs the named check on its default fixtures. Throws BadParameters for an
/// unknown name.
CheckResult run_check(const std::string& name, const VerifyConfig& cfg);
/// "all" expands to every check.
std::vector<CheckResult> run_checks(const std::vector<std::string>& names, const VerifyConfig& cfg);

nlohmann::json to_json(const CheckResult& r, bool with_timing = true);
/// {"schema": 1, "checks": [...], "pass": bool}
nlohmann::json report_json(const std::vector<CheckResult>& results, bool with_timing = true);

}  // namespace dtile
