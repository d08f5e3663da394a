#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bmmtc/core.hpp"

namespace bmmtc {

enum class McPass { kPass, kFail, kNotApplicable };

/// One seeded Monte Carlo run: T trials of n samples each, per-trial
/// substreams derived from (seed, trial index).
struct McConfig {
  std::string experiment;  // lemma1 | lemma2 | lemma3_mixture | lemma3_pure | min_cluster
  BmmParams model;
  double alpha = 0.0;    // min-cluster weight bound (min_cluster experiment)
  double delta = 0.0;    // separability margin for precondition checks
  double epsilon = 0.0;  // impurity tolerance entering the threshold formula
  std::optional<double> tau;    // explicit threshold for the pure-model experiments
  std::optional<double> tau_k;  // K plugged into the threshold formula instead
  std::optional<std::vector<std::size_t>> columns;  // designated columns (lemma1/lemma2)
  int d = 0;             // sub-dimension for the MTC experiments
  std::uint64_t n = 0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  int threads = 1;
  bool allow_precondition_failure = false;
  int dim_cap = kDefaultDimCap;
};

struct TrialStat {
  std::uint64_t index = 0;
  double statistic = 0.0;
  bool bad_event = false;
};

struct McOutcome {
  std::string experiment;
  std::uint64_t hits = 0;
  std::uint64_t trials = 0;
  double frequency = 0.0;
  double cp99_lower = 0.0;  // two-sided 99% Clopper-Pearson interval
  double cp99_upper = 1.0;
  double bound = 0.0;
  bool bound_vacuous = false;
  McPass pass = McPass::kNotApplicable;
  double tau_used = 0.0;
  int d_used = 0;
  std::size_t l_sep_used = 0;
  bool precondition_ok = true;
  std::string precondition_note;
  std::vector<TrialStat> per_trial;
};

struct ConfidenceInterval {
  double lower = 0.0;
  double upper = 1.0;
};

/// Exact binomial (Clopper-Pearson) two-sided interval.
ConfidenceInterval clopper_pearson(std::uint64_t hits, std::uint64_t trials,
                                   double confidence = 0.99);

/// Dispatches on config.experiment. Pass/fail compares the Clopper-Pearson
/// upper limit against the theoretical bound; vacuous bounds (>= 1) yield
/// not-applicable. Precondition violations throw PreconditionError unless
/// allow_precondition_failure is set, in which case the run proceeds and the
/// outcome records the failed inequality.
McOutcome run_experiment(const McConfig& config);

McConfig mc_config_from_json(const std::string& text);
std::string mc_outcome_to_json(const McOutcome& outcome);

/// CSV with header trial,statistic,bad_event.
std::string per_trial_csv(const McOutcome& outcome);

const char* to_string(McPass pass);

}  // namespace bmmtc
