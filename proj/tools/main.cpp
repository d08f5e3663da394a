// bmmtc: sample Bernoulli mixtures, measure total correlation, run the
// exhaustive MTC clustering search, and verify the concentration bounds.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "bmmtc/clusterer.hpp"
#include "bmmtc/common.hpp"
#include "bmmtc/core.hpp"
#include "bmmtc/dataset.hpp"
#include "bmmtc/evaluation.hpp"
#include "bmmtc/experiments.hpp"
#include "bmmtc/json_writer.hpp"
#include "bmmtc/measures.hpp"
#include "bmmtc/rng.hpp"
#include "bmmtc/sampler.hpp"
#include "bmmtc/theory.hpp"

namespace {

using namespace bmmtc;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNullClustering = 2;
constexpr int kExitInfeasible = 3;

int dim_cap_from_env() {
  if (const char* v = std::getenv("BMM_MTC_DIM_CAP")) {
    const int cap = std::atoi(v);
    if (cap < 1) throw ValidationError("BMM_MTC_DIM_CAP must be a positive integer");
    return cap;
  }
  return kDefaultDimCap;
}

DatasetFormat parse_format(const std::string& name) {
  if (name == "auto") return DatasetFormat::kAuto;
  if (name == "csv") return DatasetFormat::kCsv;
  if (name == "bin") return DatasetFormat::kBinary;
  throw ValidationError("unknown format '" + name + "', expected csv or bin");
}

std::vector<double> parse_reals(const std::string& csv) {
  std::vector<double> out;
  std::string cur;
  for (char c : csv + ",") {
    if (c == ',') {
      if (!cur.empty()) {
        out.push_back(std::stod(cur));
        cur.clear();
      }
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  return out;
}

std::vector<std::size_t> parse_indices(const std::string& csv) {
  std::vector<std::size_t> out;
  for (double v : parse_reals(csv)) {
    if (v < 0 || v != std::floor(v))
      throw ValidationError("column indices must be nonnegative integers");
    out.push_back(static_cast<std::size_t>(v));
  }
  return out;
}

std::string join_indices(const std::vector<std::size_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

// Resolved flags and input digests, embedded in every JSON report.
struct RunContext {
  std::string subcommand;
  std::vector<std::pair<std::string, std::string>> flags;
  std::vector<std::pair<std::string, std::string>> digests;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  explicit RunContext(std::string name) : subcommand(std::move(name)) {}

  void flag(const std::string& name, const std::string& value) { flags.emplace_back(name, value); }
  void flag(const std::string& name, double value) { flags.emplace_back(name, format_real(value)); }
  void flag(const std::string& name, std::uint64_t value) {
    flags.emplace_back(name, std::to_string(value));
  }
  void flag(const std::string& name, int value) { flags.emplace_back(name, std::to_string(value)); }

  void digest_input(const std::filesystem::path& path) {
    digests.emplace_back(path.string(), hex64(fnv1a64(read_file(path))));
  }

  void write(JsonWriter& w) const {
    const double wall =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    w.key("manifest").begin_object();
    w.kv("subcommand", subcommand);
    w.kv("version", kVersion);
    w.key("flags").begin_object();
    for (const auto& [k, v] : flags) w.kv(k, v);
    w.end_object();
    w.key("input_digests").begin_object();
    for (const auto& [k, v] : digests) w.kv(k, v);
    w.end_object();
    w.kv("wall_time_seconds", wall);
    w.end_object();
  }
};

void emit_report(const std::string& json, const std::string& out_path) {
  if (out_path.empty())
    std::cout << json << "\n";
  else
    write_file(out_path, json + "\n");
}

// ---- shared argument blocks ----------------------------------------------

struct DatasetInput {
  std::string path;
  std::string format = "auto";

  void attach(CLI::App* cmd) {
    cmd->add_option("--input", path, "dataset file (CSV of 0/1 or BMMX binary)")->required();
    cmd->add_option("--format", format, "input format: auto|csv|bin")
        ->default_val("auto");
  }
  Dataset load(RunContext& ctx) const {
    ctx.flag("input", path);
    ctx.flag("format", format);
    ctx.digest_input(path);
    return read_dataset(path, parse_format(format));
  }
};

// ---- gen ------------------------------------------------------------------

struct GenArgs {
  std::uint64_t k = 0, l = 0, n = 0, seed = 0;
  std::string p_file, w_csv, out, truth, format = "auto";
  int threads = 1;
};

int run_gen(const GenArgs& a) {
  RunContext ctx("gen");
  const auto rows = read_matrix_csv(a.p_file);
  const auto weights = parse_reals(a.w_csv);
  const auto model = BmmParams::make(rows, weights);
  if (a.k != 0 && a.k != model.components)
    throw ValidationError("--k disagrees with the frequency-matrix row count");
  if (a.l != 0 && a.l != model.dimension)
    throw ValidationError("--l disagrees with the frequency-matrix column count");

  ctx.flag("k", std::uint64_t{model.components});
  ctx.flag("l", std::uint64_t{model.dimension});
  ctx.flag("n", a.n);
  ctx.flag("seed", a.seed);
  ctx.flag("p_file", a.p_file);
  ctx.flag("w", a.w_csv);
  ctx.flag("out", a.out);
  ctx.flag("truth", a.truth);
  ctx.flag("format", a.format);
  ctx.digest_input(a.p_file);

  const auto sample = sample_bmm(model, a.n, a.seed, resolve_threads(a.threads));
  write_dataset(a.out, sample.data, parse_format(a.format));
  if (!a.truth.empty()) write_labels_csv(a.truth, sample.truth);

  JsonWriter w;
  w.begin_object();
  w.kv("seed", sample.seed);
  w.kv("params_digest", sample.params_digest);
  w.kv("n", std::uint64_t{sample.data.rows()});
  w.kv("l", std::uint64_t{sample.data.cols()});
  ctx.write(w);
  w.end_object();
  write_file(a.out + ".manifest.json", w.str() + "\n");
  return kExitOk;
}

// ---- tc / mtc ---------------------------------------------------------------

struct TcArgs {
  DatasetInput input;
  std::string columns;
};

int run_tc(const TcArgs& a) {
  RunContext ctx("tc");
  const auto data = a.input.load(ctx);
  double value = 0.0;
  if (a.columns.empty()) {
    value = total_correlation(data, dim_cap_from_env());
  } else {
    value = total_correlation(data, parse_indices(a.columns), dim_cap_from_env());
  }
  std::cout << format_real(value) << "\n";
  return kExitOk;
}

struct MtcArgs {
  DatasetInput input;
  int d = 0;
  std::uint64_t budget = 0;
  std::uint64_t seed = 0;
  int threads = 1;
};

int run_mtc(const MtcArgs& a) {
  RunContext ctx("mtc");
  const auto data = a.input.load(ctx);
  const std::optional<std::uint64_t> budget =
      a.budget == 0 ? std::nullopt : std::optional<std::uint64_t>(a.budget);
  const auto res = max_total_correlation(data, a.d, budget, a.seed, resolve_threads(a.threads),
                                         dim_cap_from_env());
  std::cout << format_real(res.value) << "\n"
            << join_indices(res.argmax_columns) << "\n"
            << (res.exhaustive ? "true" : "false") << "\n";
  return kExitOk;
}

// ---- cluster ----------------------------------------------------------------

struct ClusterArgs {
  DatasetInput input;
  double alpha = 0, delta = 0, epsilon = 0;
  int l_sep = 0;
  int d_override = 0;
  std::uint64_t search_cap = kDefaultSearchCap;
  std::uint64_t mtc_budget = 0;
  std::uint64_t mtc_seed = 0;
  std::string output, report;
  int threads = 1;
};

int run_cluster(const ClusterArgs& a) {
  RunContext ctx("cluster");
  const auto data = a.input.load(ctx);
  ctx.flag("alpha", a.alpha);
  ctx.flag("delta", a.delta);
  ctx.flag("epsilon", a.epsilon);
  ctx.flag("l_sep", a.l_sep);
  if (a.d_override > 0) ctx.flag("d", a.d_override);
  ctx.flag("search_cap", a.search_cap);
  if (a.mtc_budget > 0) ctx.flag("mtc_budget", a.mtc_budget);

  const int cap = dim_cap_from_env();
  const auto params = derive_algo_params(
      a.alpha, a.delta, a.epsilon, a.l_sep,
      a.d_override > 0 ? std::optional<int>(a.d_override) : std::nullopt, cap);

  ClusterOptions opts;
  opts.search_cap = a.search_cap;
  if (a.mtc_budget > 0) opts.mtc_budget = a.mtc_budget;
  opts.mtc_seed = a.mtc_seed;
  opts.threads = resolve_threads(a.threads);
  opts.dim_cap = cap;

  const auto run = cluster_algorithm1(data, params, opts);

  if (run.result && !a.output.empty()) write_labels_csv(a.output, *run.result);

  JsonWriter w;
  w.begin_object();
  w.key("algo_params").begin_object();
  w.kv("alpha", params.alpha)
      .kv("delta", params.delta)
      .kv("epsilon", params.epsilon)
      .kv("l_sep", params.l_sep)
      .kv("d", params.d)
      .kv("tau", params.tau)
      .kv("beta", params.beta);
  w.end_object();
  w.kv("accepted", run.result.has_value());
  if (run.accepted_kappa)
    w.kv("accepted_kappa", *run.accepted_kappa);
  else
    w.key("accepted_kappa").null();
  w.kv("partitions_tested", run.partitions_tested);
  w.kv("mtc_evaluations", run.mtc_evaluations);
  w.key("cluster_mtc").begin_array();
  for (double v : run.accepted_cluster_mtc) w.value(v);
  w.end_array();
  if (run.result) {
    w.key("labels").begin_array();
    for (auto z : run.result->z) w.value(std::uint64_t{z});
    w.end_array();
  } else {
    w.key("labels").null();
  }
  w.key("warnings").begin_array();
  if (params.tau_vacuous())
    w.value("tau is at or above the maximum attainable total correlation; the pureness test is vacuous");
  w.end_array();
  ctx.write(w);
  w.end_object();
  if (!a.report.empty()) write_file(a.report, w.str() + "\n");

  return run.result ? kExitOk : kExitNullClustering;
}

// ---- eval -------------------------------------------------------------------

struct EvalArgs {
  std::string pred, truth, epsilons, out;
};

int run_eval(const EvalArgs& a) {
  RunContext ctx("eval");
  ctx.flag("pred", a.pred);
  ctx.flag("truth", a.truth);
  ctx.flag("epsilons", a.epsilons);
  ctx.digest_input(a.pred);
  ctx.digest_input(a.truth);

  const auto pred = read_labels_csv(a.pred);
  const auto truth = read_labels_csv(a.truth);
  const auto eps_list = parse_reals(a.epsilons);

  JsonWriter w;
  w.begin_object();
  w.key("eps_correct").begin_array();
  for (double eps : eps_list) {
    w.begin_object();
    w.kv("epsilon", eps);
    w.kv("correct", is_eps_correct(pred, truth, eps));
    w.end_object();
  }
  w.end_array();
  w.kv("misclustering_rate", misclustering_rate(pred, truth));
  std::vector<std::uint64_t> sizes(pred.max_label(), 0);
  for (auto z : pred.z) ++sizes[z - 1];
  w.key("cluster_sizes").begin_array();
  for (auto s : sizes) w.value(s);
  w.end_array();
  ctx.write(w);
  w.end_object();
  emit_report(w.str(), a.out);
  return kExitOk;
}

// ---- separability -------------------------------------------------------------

struct SepArgs {
  std::string p_file;
  double delta = 0;
  std::string out;
};

int run_separability(const SepArgs& a) {
  RunContext ctx("separability");
  ctx.flag("p_file", a.p_file);
  ctx.flag("delta", a.delta);
  ctx.digest_input(a.p_file);

  const auto rep = separability(read_matrix_csv(a.p_file), a.delta);

  JsonWriter w;
  w.begin_object();
  w.kv("delta", rep.delta);
  w.kv("l_sep", std::uint64_t{rep.l_sep});
  w.key("per_pair_counts").begin_array();
  for (const auto& pc : rep.per_pair_counts) {
    w.begin_object();
    w.kv("k1", std::uint64_t{pc.k1});
    w.kv("k2", std::uint64_t{pc.k2});
    w.kv("count", std::uint64_t{pc.count});
    w.end_object();
  }
  w.end_array();
  w.kv("single_component_convention", rep.single_component_convention);
  ctx.write(w);
  w.end_object();
  emit_report(w.str(), a.out);
  return kExitOk;
}

// ---- params -------------------------------------------------------------------

struct ParamsArgs {
  double alpha = 0, delta = 0, epsilon = 0;
  int l_sep = 0;
  int d_override = 0;
  double n = 0.0;
  double zeta = 0.05;
  double big_l = 0.0;
  double const_b = 1.0, const_c = 1.0;
  std::string out;
};

int run_params(const ParamsArgs& a) {
  RunContext ctx("params");
  ctx.flag("alpha", a.alpha);
  ctx.flag("delta", a.delta);
  ctx.flag("epsilon", a.epsilon);
  ctx.flag("l_sep", a.l_sep);
  if (a.d_override > 0) ctx.flag("d", a.d_override);
  ctx.flag("n", a.n);
  ctx.flag("zeta", a.zeta);

  const int cap = dim_cap_from_env();
  const auto params = derive_algo_params(
      a.alpha, a.delta, a.epsilon, a.l_sep,
      a.d_override > 0 ? std::optional<int>(a.d_override) : std::nullopt, cap);
  const double big_l = a.big_l > 0 ? a.big_l : static_cast<double>(a.l_sep);
  const int kappa_max = static_cast<int>(ceil_tol(1.0 / a.alpha));

  JsonWriter w;
  w.begin_object();
  w.key("algo_params").begin_object();
  w.kv("alpha", params.alpha)
      .kv("delta", params.delta)
      .kv("epsilon", params.epsilon)
      .kv("l_sep", params.l_sep)
      .kv("d", params.d)
      .kv("tau", params.tau)
      .kv("beta", params.beta);
  w.end_object();
  w.key("context").begin_object();
  w.kv("n", a.n)
      .kv("zeta", a.zeta)
      .kv("big_l", big_l)
      .kv("kappa_max", kappa_max)
      .kv("b_const", a.const_b)
      .kv("c_const", a.const_c);
  w.end_object();

  const auto bound_entry = [&w](const std::string& name, double value) {
    w.key(name).begin_object();
    w.kv("value", value);
    w.kv("vacuous", !(value < 1.0));
    w.end_object();
  };
  w.key("bounds").begin_object();
  bound_entry("mixture_low_tc", bound_mixture_low_tc(a.n, params.d, params.tau));
  bound_entry("pure_high_tc", bound_pure_high_tc(a.n, params.d, params.tau));
  bound_entry("mtc_mixture", bound_mtc_mixture(a.n, params.l_sep, params.d, params.tau));
  bound_entry("mtc_pure", bound_mtc_pure(a.n, big_l, params.d, params.tau));
  bound_entry("min_cluster", min_cluster_bound(kappa_max, a.alpha, a.n));
  w.end_object();

  const auto thresholds =
      theorem1_thresholds(a.alpha, a.delta, a.epsilon, a.zeta, big_l, a.const_b, a.const_c);
  w.key("thresholds").begin_object();
  w.kv("min_n_for_cluster_sizes",
       std::int64_t{min_n_for_cluster_sizes(a.alpha, kappa_max, a.zeta)});
  w.key("theorem1").begin_object();
  w.kv("l_sep_min", thresholds.l_sep_min);
  w.kv("n_min", thresholds.n_min);
  w.kv("note", "B and C are symbolic constants; the supplied values only fix a reporting scale");
  w.end_object();
  w.end_object();

  w.key("warnings").begin_array();
  if (params.tau_vacuous())
    w.value("tau is at or above the maximum attainable total correlation; the pureness test is vacuous");
  w.end_array();
  ctx.write(w);
  w.end_object();
  emit_report(w.str(), a.out);
  return kExitOk;
}

// ---- verify ---------------------------------------------------------------------

struct VerifyArgs {
  std::string experiment, config, out, trials_csv;
  int threads = 0;
};

int run_verify(const VerifyArgs& a) {
  RunContext ctx("verify");
  ctx.flag("experiment", a.experiment);
  ctx.flag("config", a.config);
  ctx.digest_input(a.config);

  auto config = mc_config_from_json(read_file(a.config));
  if (!a.experiment.empty()) {
    if (!config.experiment.empty() && config.experiment != a.experiment)
      throw ValidationError("--experiment disagrees with the config file");
    config.experiment = a.experiment;
  }
  if (a.threads > 0) config.threads = a.threads;
  config.threads = resolve_threads(config.threads);

  const auto outcome = run_experiment(config);

  // outcome JSON with the manifest appended
  std::string body = mc_outcome_to_json(outcome);
  JsonWriter manifest_only;
  manifest_only.begin_object();
  ctx.write(manifest_only);
  manifest_only.end_object();
  // splice: drop the closing brace of the body and the opening brace of the manifest
  std::string merged = body.substr(0, body.size() - 1) + "," +
                       manifest_only.str().substr(1);
  emit_report(merged, a.out);
  if (!a.trials_csv.empty()) write_file(a.trials_csv, per_trial_csv(outcome));
  return kExitOk;
}

// ---- error reporting --------------------------------------------------------------

int report_error(const std::string& type, const std::string& message, int code) {
  JsonWriter w;
  w.begin_object().kv("error", message).kv("type", type).kv("exit_code", code).end_object();
  std::cerr << w.str() << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bernoulli mixture clustering via maximal total correlation"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "sample a labeled dataset from a mixture model");
  gen_cmd->add_option("--k", gen.k, "component count (checked against --p-file)");
  gen_cmd->add_option("--l", gen.l, "dimension (checked against --p-file)");
  gen_cmd->add_option("--n", gen.n, "rows to sample")->required();
  gen_cmd->add_option("--seed", gen.seed, "64-bit seed")->required();
  gen_cmd->add_option("--p-file", gen.p_file, "frequency matrix CSV (K rows, L columns)")
      ->required();
  gen_cmd->add_option("--w", gen.w_csv, "mixture weights, comma separated")->required();
  gen_cmd->add_option("--out", gen.out, "output dataset path")->required();
  gen_cmd->add_option("--truth", gen.truth, "output truth-label CSV path");
  gen_cmd->add_option("--format", gen.format, "output format: auto|csv|bin (auto: by extension)");
  gen_cmd->add_option("--threads", gen.threads, "worker threads, 0 = auto");

  TcArgs tc;
  auto* tc_cmd = app.add_subcommand("tc", "total correlation of a dataset");
  tc.input.attach(tc_cmd);
  tc_cmd->add_option("--columns", tc.columns, "column subset, comma separated (default: all)");

  MtcArgs mtc;
  auto* mtc_cmd = app.add_subcommand("mtc", "maximal total correlation over d-column subsets");
  mtc.input.attach(mtc_cmd);
  mtc_cmd->add_option("--d", mtc.d, "sub-dimension")->required();
  mtc_cmd->add_option("--budget", mtc.budget, "examine only this many sampled subsets");
  mtc_cmd->add_option("--seed", mtc.seed, "seed for the budgeted subset stream");
  mtc_cmd->add_option("--threads", mtc.threads, "worker threads, 0 = auto");

  ClusterArgs cluster;
  auto* cluster_cmd = app.add_subcommand("cluster", "exhaustive MTC clustering search");
  cluster.input.attach(cluster_cmd);
  cluster_cmd->add_option("--alpha", cluster.alpha, "minimum cluster weight")->required();
  cluster_cmd->add_option("--delta", cluster.delta, "separation margin")->required();
  cluster_cmd->add_option("--epsilon", cluster.epsilon, "impurity tolerance")->required();
  cluster_cmd->add_option("--l-sep", cluster.l_sep, "informative-dimension count")->required();
  cluster_cmd->add_option("--d", cluster.d_override, "override the derived sub-dimension");
  cluster_cmd->add_option("--search-cap", cluster.search_cap, "candidate partition cap");
  cluster_cmd->add_option("--mtc-budget", cluster.mtc_budget, "subset budget per MTC evaluation");
  cluster_cmd->add_option("--mtc-seed", cluster.mtc_seed, "seed for budgeted MTC streams");
  cluster_cmd->add_option("--output", cluster.output, "accepted labels CSV path");
  cluster_cmd->add_option("--report", cluster.report, "run report JSON path");
  cluster_cmd->add_option("--threads", cluster.threads, "worker threads, 0 = auto");

  EvalArgs eval;
  auto* eval_cmd = app.add_subcommand("eval", "compare predicted labels against the truth");
  eval_cmd->add_option("--pred", eval.pred, "predicted labels CSV")->required();
  eval_cmd->add_option("--truth", eval.truth, "truth labels CSV")->required();
  eval_cmd->add_option("--epsilons", eval.epsilons, "epsilon list, comma separated")->required();
  eval_cmd->add_option("--out", eval.out, "report JSON path (default: stdout)");

  SepArgs sep;
  auto* sep_cmd = app.add_subcommand("separability", "column-separation counts of a model");
  sep_cmd->add_option("--p-file", sep.p_file, "frequency matrix CSV")->required();
  sep_cmd->add_option("--delta", sep.delta, "separation margin")->required();
  sep_cmd->add_option("--out", sep.out, "report JSON path (default: stdout)");

  ParamsArgs params;
  auto* params_cmd = app.add_subcommand("params", "derived parameters and bound report");
  params_cmd->add_option("--alpha", params.alpha, "minimum cluster weight")->required();
  params_cmd->add_option("--delta", params.delta, "separation margin")->required();
  params_cmd->add_option("--epsilon", params.epsilon, "impurity tolerance")->required();
  params_cmd->add_option("--l-sep", params.l_sep, "informative-dimension count")->required();
  params_cmd->add_option("--d", params.d_override, "override the derived sub-dimension");
  params_cmd->add_option("--n", params.n, "sample size the bounds are evaluated at");
  params_cmd->add_option("--zeta", params.zeta, "failure probability budget");
  params_cmd->add_option("--big-l", params.big_l, "ambient dimension L (default: l-sep)");
  params_cmd->add_option("--const-b", params.const_b, "stand-in for the symbolic constant B");
  params_cmd->add_option("--const-c", params.const_c, "stand-in for the symbolic constant C");
  params_cmd->add_option("--out", params.out, "report JSON path (default: stdout)");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Monte Carlo check of a concentration bound");
  verify_cmd->add_option("--experiment", verify.experiment,
                         "lemma1|lemma2|lemma3_mixture|lemma3_pure|min_cluster");
  verify_cmd->add_option("--config", verify.config, "McConfig JSON file")->required();
  verify_cmd->add_option("--out", verify.out, "outcome JSON path (default: stdout)");
  verify_cmd->add_option("--trials-csv", verify.trials_csv, "per-trial statistics CSV path");
  verify_cmd->add_option("--threads", verify.threads, "override the config's thread count");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    return report_error("usage", e.what(), kExitUsage);
  }

  try {
    if (gen_cmd->parsed()) return run_gen(gen);
    if (tc_cmd->parsed()) return run_tc(tc);
    if (mtc_cmd->parsed()) return run_mtc(mtc);
    if (cluster_cmd->parsed()) return run_cluster(cluster);
    if (eval_cmd->parsed()) return run_eval(eval);
    if (sep_cmd->parsed()) return run_separability(sep);
    if (params_cmd->parsed()) return run_params(params);
    if (verify_cmd->parsed()) return run_verify(verify);
  } catch (const InfeasibleDimensionError& e) {
    return report_error("infeasible_dimension", e.what(), kExitInfeasible);
  } catch (const SearchCapError& e) {
    return report_error("search_cap", e.what(), kExitInfeasible);
  } catch (const std::exception& e) {
    return report_error("validation", e.what(), kExitUsage);
  }
  return report_error("usage", "no subcommand given", kExitUsage);
}
