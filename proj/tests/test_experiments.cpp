#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "bmmtc/experiments.hpp"
#include "bmmtc/theory.hpp"

using namespace bmmtc;

namespace {

McConfig base_config() {
  McConfig c;
  c.epsilon = 0.2;
  c.delta = 0.9;
  c.n = 200;
  c.trials = 50;
  c.seed = 11;
  return c;
}

BmmParams alternating_mixture(int d) {
  std::vector<std::vector<double>> rows(2, std::vector<double>(d));
  for (int j = 0; j < d; ++j) {
    rows[0][j] = j % 2 == 0 ? 0.05 : 0.95;
    rows[1][j] = j % 2 == 0 ? 0.95 : 0.05;
  }
  return BmmParams::make(rows, {0.5, 0.5});
}

}  // namespace

TEST_CASE("clopper-pearson endpoints match closed forms") {
  const auto zero = clopper_pearson(0, 400);
  CHECK(zero.lower == 0.0);
  CHECK(zero.upper == doctest::Approx(1.0 - std::pow(0.005, 1.0 / 400)).epsilon(1e-10));
  const auto full = clopper_pearson(400, 400);
  CHECK(full.upper == 1.0);
  CHECK(full.lower == doctest::Approx(std::pow(0.005, 1.0 / 400)).epsilon(1e-10));
  const auto mid = clopper_pearson(50, 100);
  CHECK(mid.lower < 0.5);
  CHECK(mid.upper > 0.5);
  CHECK(mid.upper - mid.lower < 0.3);
  CHECK_THROWS_AS(clopper_pearson(5, 4), ValidationError);
}

TEST_CASE("lemma1 rejects degenerate mixtures") {
  auto c = base_config();
  c.experiment = "lemma1";
  c.model = BmmParams::make({{0.3, 0.7, 0.5}, {0.3, 0.7, 0.5}}, {0.5, 0.5});
  CHECK_THROWS_AS(run_experiment(c), PreconditionError);
}

TEST_CASE("lemma1 desk-scale model needs the precondition override") {
  auto c = base_config();
  c.experiment = "lemma1";
  c.model = alternating_mixture(3);
  // at d = l_sep = 3 the statement's column requirement cannot hold
  CHECK_THROWS_AS(run_experiment(c), PreconditionError);

  c.allow_precondition_failure = true;
  c.n = 500;
  c.trials = 100;
  const auto out = run_experiment(c);
  CHECK_FALSE(out.precondition_ok);
  CHECK(out.precondition_note.find("separated-column") != std::string::npos);
  CHECK(out.d_used == 3);
  CHECK(out.l_sep_used == 3);
  CHECK(out.tau_used == doctest::Approx(0.330259).epsilon(1e-5));
  CHECK(out.bound == doctest::Approx(bound_mixture_low_tc(500, 3, out.tau_used)).epsilon(1e-12));
  CHECK(out.bound_vacuous);  // 16 e^(-beta 500) stays above 1
  CHECK(out.pass == McPass::kNotApplicable);
  CHECK(out.per_trial.size() == 100);
}

TEST_CASE("lemma1 large samples never fall below tau") {
  auto c = base_config();
  c.experiment = "lemma1";
  c.model = alternating_mixture(3);
  c.allow_precondition_failure = true;
  c.n = 100000;
  c.trials = 50;
  c.threads = 4;
  const auto out = run_experiment(c);
  CHECK(out.hits == 0);
  CHECK(out.frequency == 0.0);
}

TEST_CASE("lemma2 constant model never crosses tau") {
  auto c = base_config();
  c.experiment = "lemma2";
  c.model = BmmParams::make({{0.0, 0.0, 0.0}}, {1.0});
  c.tau_k = 2.0;
  const auto out = run_experiment(c);
  CHECK(out.hits == 0);
  CHECK(out.tau_used == doctest::Approx(0.330259).epsilon(1e-5));
}

TEST_CASE("lemma2 fair-coin model reproduces the worked bound") {
  auto c = base_config();
  c.experiment = "lemma2";
  c.model = BmmParams::make({{0.5, 0.5, 0.5}}, {1.0});
  c.tau_k = 2.0;
  c.n = 2000;
  c.trials = 100;
  const auto out = run_experiment(c);
  CHECK(out.bound == doctest::Approx(3.5177).epsilon(1e-3));
  CHECK(out.bound_vacuous);
  CHECK(out.pass == McPass::kNotApplicable);
  CHECK(out.frequency <= 0.05);  // empirically near zero long before n = 2000
}

TEST_CASE("lemma2 requires a threshold") {
  auto c = base_config();
  c.experiment = "lemma2";
  c.model = BmmParams::make({{0.5, 0.5}}, {1.0});
  CHECK_THROWS_AS(run_experiment(c), ValidationError);
  c.tau = 0.4;
  CHECK_NOTHROW(run_experiment(c));
}

TEST_CASE("lemma3 pure variant on constant data") {
  auto c = base_config();
  c.experiment = "lemma3_pure";
  c.model = BmmParams::make({std::vector<double>(8, 0.0)}, {1.0});
  c.d = 2;
  c.tau = 0.33;
  const auto out = run_experiment(c);
  CHECK(out.hits == 0);
  CHECK(out.d_used == 2);
}

TEST_CASE("lemma3 mixture variant runs at desk scale") {
  auto c = base_config();
  c.experiment = "lemma3_mixture";
  c.model = alternating_mixture(8);
  c.d = 2;
  c.n = 400;
  c.trials = 60;
  const auto out = run_experiment(c);
  CHECK(out.precondition_ok);  // 8 separated columns clear the statement's requirement
  CHECK(out.l_sep_used == 8);
  CHECK(out.bound ==
        doctest::Approx(bound_mtc_mixture(400, 8, 2, out.tau_used)).epsilon(1e-12));
  // large-sample mixtures keep the maximal total correlation above tau
  CHECK(out.frequency <= 0.1);
}

TEST_CASE("lemma3 pure variant with fair coins") {
  auto c = base_config();
  c.experiment = "lemma3_pure";
  c.model = BmmParams::make({std::vector<double>(8, 0.5)}, {1.0});
  c.d = 2;
  c.tau_k = 2.0;
  c.n = 3000;
  c.trials = 1000;  // drives the Clopper-Pearson upper limit below the bound
  c.threads = 4;
  const auto out = run_experiment(c);
  CHECK(out.bound == doctest::Approx(bound_mtc_pure(3000, 8, 2, out.tau_used)).epsilon(1e-12));
  CHECK_FALSE(out.bound_vacuous);
  // at n = 3000 the empirical MTC sits near zero; no bad events expected
  CHECK(out.hits == 0);
  CHECK(out.pass == McPass::kPass);
}

TEST_CASE("min cluster experiment") {
  auto c = base_config();
  c.experiment = "min_cluster";
  c.alpha = 1.0;
  c.model = BmmParams::make({{0.5}}, {1.0});
  const auto out = run_experiment(c);
  CHECK(out.hits == 0);  // a single cluster always holds all n items

  auto c2 = base_config();
  c2.experiment = "min_cluster";
  c2.alpha = 0.5;
  c2.model = BmmParams::make({{0.0}, {1.0}}, {0.5, 0.5});
  c2.n = 4;
  c2.trials = 4000;
  const auto out2 = run_experiment(c2);
  // exact enumeration: min count < 1 means one side empty, probability 2/16
  CHECK(out2.frequency == doctest::Approx(0.125).epsilon(0.15));
  CHECK(out2.cp99_lower <= 0.125);
  CHECK(out2.cp99_upper >= 0.125);

  c2.alpha = 0.6;  // violates min_k w_k >= alpha
  CHECK_THROWS_AS(run_experiment(c2), ValidationError);
}

TEST_CASE("bad-event frequency does not grow with n") {
  auto c = base_config();
  c.experiment = "min_cluster";
  c.alpha = 0.5;
  c.model = BmmParams::make({{0.0}, {1.0}}, {0.5, 0.5});
  c.trials = 2000;
  c.n = 8;
  const double f1 = run_experiment(c).frequency;
  c.n = 32;
  const double f2 = run_experiment(c).frequency;
  const double se = std::sqrt(std::max(f1, 1e-9) * (1.0 - f1) / 2000.0);
  CHECK(f2 <= f1 + 3.0 * se);
}

TEST_CASE("outcomes are reproducible and thread-count independent") {
  auto c = base_config();
  c.experiment = "min_cluster";
  c.alpha = 0.4;
  c.model = BmmParams::make({{0.1}, {0.9}}, {0.4, 0.6});
  c.n = 12;
  c.trials = 500;
  const auto a = run_experiment(c);
  const auto b = run_experiment(c);
  c.threads = 4;
  const auto d = run_experiment(c);
  CHECK(a.hits == b.hits);
  CHECK(a.hits == d.hits);
  REQUIRE(a.per_trial.size() == d.per_trial.size());
  for (std::size_t i = 0; i < a.per_trial.size(); ++i) {
    CHECK(a.per_trial[i].statistic == d.per_trial[i].statistic);
    CHECK(a.per_trial[i].bad_event == d.per_trial[i].bad_event);
  }
}

TEST_CASE("config json parsing") {
  const std::string text = R"({
    "experiment": "lemma1",
    "model": {"p": [[0.05, 0.95, 0.05], [0.95, 0.05, 0.95]], "w": [0.5, 0.5]},
    "epsilon": 0.2, "delta": 0.9,
    "n": 500, "trials": 400, "seed": 7,
    "allow_precondition_failure": true
  })";
  const auto c = mc_config_from_json(text);
  CHECK(c.experiment == "lemma1");
  CHECK(c.model.components == 2);
  CHECK(c.model.dimension == 3);
  CHECK(c.epsilon == 0.2);
  CHECK(c.n == 500);
  CHECK(c.trials == 400);
  CHECK(c.seed == 7);
  CHECK(c.allow_precondition_failure);
  CHECK_FALSE(c.tau.has_value());
}

TEST_CASE("outcome serialization") {
  auto c = base_config();
  c.experiment = "min_cluster";
  c.alpha = 0.5;
  c.model = BmmParams::make({{0.0}, {1.0}}, {0.5, 0.5});
  c.n = 16;
  c.trials = 100;
  const auto out = run_experiment(c);
  const auto json = mc_outcome_to_json(out);
  CHECK(json.find("\"experiment\":\"min_cluster\"") != std::string::npos);
  CHECK(json.find("\"trials\":100") != std::string::npos);
  const auto csv = per_trial_csv(out);
  CHECK(csv.rfind("trial,statistic,bad_event\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 101);
}
