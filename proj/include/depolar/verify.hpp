#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "depolar/oracle.hpp"

namespace depolar {

/// Tally of one family of checks. Only the first few failures are kept.
struct CheckReport {
  static constexpr std::size_t kKeptFailures = 5;

  explicit CheckReport(std::string report_name) : name(std::move(report_name)) {}

  std::string name;
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  std::vector<std::string> first_failures;
  nlohmann::ordered_json notes = nlohmann::ordered_json::object();

  bool passed() const noexcept { return failures == 0; }
  void expect(bool ok, const std::function<std::string()>& describe);
  void merge(const CheckReport& other);
  nlohmann::ordered_json to_json() const;
};

/// sum_lambda dim F_lambda dim U_lambda = d^n for n = 0..max_n.
CheckReport check_schur_weyl(int d, int max_n);

/// Tableau count = character inner product, c^l_{mn} = c^l_{nm}, and the
/// restriction identity, over d <= max_d, n <= max_n.
CheckReport check_lr_cross_validation(int max_d, int max_n);

/// Outside the support window: no common mu in the branching of lambda and
/// lambda', and twirl_spectrum vanishes there.
CheckReport check_theorem1_combinatorial(int d, int max_n);

/// Dense overlap tr{P_lambda' (tr_B P_lambda (x) 1_B)} is exactly 0 outside
/// the window. B runs over the trailing k sites, or over every subset when
/// `all_subsets` is set.
CheckReport check_theorem1_dense(int d, int max_n, bool all_subsets);

/// Branching table, twirl_spectrum and channel_output_spectrum equal the
/// dense computation as exact rationals.
CheckReport check_fast_vs_oracle(int d, int max_n, const std::vector<ExactScalar>& qs);

/// Output probability <= theorem2_bound whenever |l_1 - l'_1|/n > q (d = 2),
/// compared as log2 values with additive slack 1e-12.
CheckReport check_theorem2(const std::vector<int>& ns, const std::vector<ExactScalar>& qs);

/// lr > 0 => basic Horn inequalities; horn_feasible <=> lr > 0; basic Horn
/// false => infeasible.
CheckReport check_horn_saturation(int max_d, int max_n);

/// Single-row input, d = 2, every k and lambda'.
CheckReport check_lemma(int max_n);

/// sum_{c != 0} P_mu (x) P_nu - P_lambda is PSD, d = 2, every split.
CheckReport check_positivity(int max_n);

/// Random PSD rational operators: depolarise_n preserves trace and
/// positivity, and on permutation-invariant input equals the twirled
/// binomial mixture.
CheckReport check_channel_properties(int d, int max_n, const std::vector<ExactScalar>& qs, unsigned seed);

/// Input pi_{(n,0)}, d = 2: argmax of lambda'_1 from the engine against the
/// dense channel, per q. Reports n q/2 and n (1 - q/2) next to the mode.
CheckReport concentration_report(int n, const std::vector<ExactScalar>& qs);

struct VerifyConfig {
  std::string suite = "all";
  int cap_n = 6;     // d = 2
  int cap_n_d3 = 4;  // d = 3
  std::vector<ExactScalar> q_grid;  // empty: 1/10, ..., 9/10
  unsigned seed = 7;
};

const std::vector<std::string>& verify_suite_names();

/// Runs the selected suite. Throws std::invalid_argument on an unknown suite
/// name. The report contains no timings, so it is a pure function of the
/// configuration.
nlohmann::ordered_json run_verify(const VerifyConfig& config);

std::vector<ExactScalar> default_q_grid();

}  // namespace depolar
