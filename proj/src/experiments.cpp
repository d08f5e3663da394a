#include "bmmtc/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <boost/math/special_functions/beta.hpp>

#include "json.hpp"

#include "bmmtc/evaluation.hpp"
#include "bmmtc/json_writer.hpp"
#include "bmmtc/measures.hpp"
#include "bmmtc/rng.hpp"
#include "bmmtc/sampler.hpp"
#include "bmmtc/theory.hpp"

namespace bmmtc {

ConfidenceInterval clopper_pearson(std::uint64_t hits, std::uint64_t trials, double confidence) {
  if (trials < 1) throw ValidationError("trial count must be positive");
  if (hits > trials) throw ValidationError("hits exceed trials");
  const double a2 = (1.0 - confidence) / 2.0;
  ConfidenceInterval ci;
  const double x = static_cast<double>(hits);
  const double n = static_cast<double>(trials);
  ci.lower = hits == 0 ? 0.0 : boost::math::ibeta_inv(x, n - x + 1.0, a2);
  ci.upper = hits == trials ? 1.0 : boost::math::ibeta_inv(x + 1.0, n - x, 1.0 - a2);
  return ci;
}

namespace {

std::vector<std::size_t> designated_columns(const McConfig& c) {
  if (c.columns && !c.columns->empty()) {
    for (std::size_t j : *c.columns)
      if (j >= c.model.dimension) throw ValidationError("designated column out of range");
    return *c.columns;
  }
  std::vector<std::size_t> cols(c.model.dimension);
  std::iota(cols.begin(), cols.end(), std::size_t{0});
  return cols;
}

double resolve_tau(const McConfig& c, bool force_true_k) {
  if (force_true_k) return pureness_threshold(c.epsilon, static_cast<double>(c.model.components));
  if (c.tau) return *c.tau;
  if (c.tau_k) return pureness_threshold(c.epsilon, *c.tau_k);
  throw ValidationError("experiment needs an explicit tau or tau_k");
}

void check_epsilon(const McConfig& c) {
  if (!(c.epsilon > 0.0 && c.epsilon < 1.0)) throw ValidationError("epsilon must lie in (0,1)");
}

/// Mixture-model preconditions: w_k <= 1-eps for all k, and enough separated
/// columns for the threshold formula. Returns an empty string when satisfied.
std::string mixture_precondition_note(const McConfig& c,
                                      const std::vector<std::size_t>& cols,
                                      std::size_t* l_sep_out) {
  std::vector<std::vector<double>> sub(c.model.components);
  for (std::size_t k = 0; k < c.model.components; ++k) {
    sub[k].reserve(cols.size());
    for (std::size_t j : cols) sub[k].push_back(c.model.p(k, j));
  }
  const auto rep = separability(sub, c.delta);
  *l_sep_out = rep.l_sep;

  for (double w : c.model.weight)
    if (w > 1.0 - c.epsilon + 1e-15)
      return "weight " + format_real(w) + " exceeds 1-epsilon = " + format_real(1.0 - c.epsilon);

  const double k = static_cast<double>(c.model.components);
  const double required =
      (1.0 + std::log(k / c.epsilon)) / ((1.0 - c.epsilon) * c.delta * c.delta);
  if (!(static_cast<double>(rep.l_sep) > required))
    return "separated-column count " + std::to_string(rep.l_sep) +
           " is not greater than (1+ln(K/eps))/((1-eps) delta^2) = " + format_real(required);
  return {};
}

void apply_precondition(const McConfig& c, std::string note, McOutcome* out) {
  if (note.empty()) return;
  if (!c.allow_precondition_failure) throw PreconditionError(note);
  out->precondition_ok = false;
  out->precondition_note = std::move(note);
}

void finalize(const McConfig& c, McOutcome* out) {
  out->trials = c.trials;
  out->hits = 0;
  for (const auto& t : out->per_trial) out->hits += t.bad_event;
  out->frequency = static_cast<double>(out->hits) / static_cast<double>(out->trials);
  const auto ci = clopper_pearson(out->hits, out->trials);
  out->cp99_lower = ci.lower;
  out->cp99_upper = ci.upper;
  out->bound_vacuous = !(out->bound < 1.0);
  if (out->bound_vacuous)
    out->pass = McPass::kNotApplicable;
  else
    out->pass = out->cp99_upper <= out->bound ? McPass::kPass : McPass::kFail;
}

void run_trials(const McConfig& c, McOutcome* out,
                const std::function<TrialStat(std::uint64_t)>& one_trial) {
  if (c.trials < 1) throw ValidationError("trial count must be positive");
  if (c.n < 1) throw ValidationError("samples per trial must be positive");
  out->per_trial.assign(c.trials, TrialStat{});
  parallel_for_index(c.trials, c.threads,
                     [&](std::size_t t) { out->per_trial[t] = one_trial(t); });
  finalize(c, out);
}

McOutcome mc_total_correlation(const McConfig& c, bool mixture) {
  McOutcome out;
  out.experiment = c.experiment;
  check_epsilon(c);
  if (mixture && c.model.components < 2)
    throw ValidationError(c.experiment + " needs a model with K >= 2");
  if (!mixture && c.model.components != 1)
    throw ValidationError(c.experiment + " needs a single-component model");

  const auto cols = designated_columns(c);
  out.d_used = static_cast<int>(cols.size());
  if (out.d_used > c.dim_cap)
    throw InfeasibleDimensionError("designated column count exceeds the joint-table cap");
  out.tau_used = resolve_tau(c, mixture);

  if (mixture) {
    std::size_t l_sep = 0;
    apply_precondition(c, mixture_precondition_note(c, cols, &l_sep), &out);
    out.l_sep_used = l_sep;
    out.bound = bound_mixture_low_tc(static_cast<double>(c.n), out.d_used, out.tau_used);
  } else {
    out.bound = bound_pure_high_tc(static_cast<double>(c.n), out.d_used, out.tau_used);
  }

  run_trials(c, &out, [&](std::uint64_t t) {
    const auto sample = sample_bmm(c.model, c.n, substream_seed(c.seed, t));
    const double stat = total_correlation(sample.data, cols, c.dim_cap);
    const bool bad = mixture ? stat <= out.tau_used : stat >= out.tau_used;
    return TrialStat{t, stat, bad};
  });
  return out;
}

McOutcome mc_mtc(const McConfig& c, bool mixture) {
  McOutcome out;
  out.experiment = c.experiment;
  check_epsilon(c);
  if (mixture && c.model.components < 2)
    throw ValidationError(c.experiment + " needs a model with K >= 2");
  if (!mixture && c.model.components != 1)
    throw ValidationError(c.experiment + " needs a single-component model");
  if (c.d < 1) throw ValidationError(c.experiment + " needs a sub-dimension d");
  if (static_cast<std::size_t>(c.d) > c.model.dimension)
    throw ValidationError("sub-dimension exceeds model dimension");

  out.d_used = c.d;
  out.tau_used = resolve_tau(c, mixture);

  if (mixture) {
    std::vector<std::size_t> all(c.model.dimension);
    std::iota(all.begin(), all.end(), std::size_t{0});
    std::size_t l_sep = 0;
    std::string note = mixture_precondition_note(c, all, &l_sep);
    if (note.empty() && !(l_sep > static_cast<std::size_t>(c.d)))
      note = "separated-column count " + std::to_string(l_sep) +
             " is not greater than d = " + std::to_string(c.d);
    apply_precondition(c, std::move(note), &out);
    out.l_sep_used = l_sep;
    out.bound = bound_mtc_mixture(static_cast<double>(c.n), static_cast<double>(l_sep),
                                  out.d_used, out.tau_used);
  } else {
    out.bound = bound_mtc_pure(static_cast<double>(c.n),
                               static_cast<double>(c.model.dimension), out.d_used, out.tau_used);
  }

  run_trials(c, &out, [&](std::uint64_t t) {
    const auto sample = sample_bmm(c.model, c.n, substream_seed(c.seed, t));
    const auto mtc = max_total_correlation(sample.data, c.d, std::nullopt, 0, 1, c.dim_cap);
    const bool bad = mixture ? mtc.value <= out.tau_used : mtc.value >= out.tau_used;
    return TrialStat{t, mtc.value, bad};
  });
  return out;
}

McOutcome mc_min_cluster(const McConfig& c) {
  McOutcome out;
  out.experiment = c.experiment;
  if (!(c.alpha > 0.0 && c.alpha <= 1.0)) throw ValidationError("alpha must lie in (0,1]");
  const double wmin = *std::min_element(c.model.weight.begin(), c.model.weight.end());
  if (wmin < c.alpha - 1e-15)
    throw ValidationError("model violates min_k w_k >= alpha: " + format_real(wmin) + " < " +
                          format_real(c.alpha));
  const auto k = c.model.components;
  out.bound = min_cluster_bound(static_cast<int>(k), c.alpha, static_cast<double>(c.n));

  run_trials(c, &out, [&](std::uint64_t t) {
    const auto labels = sample_labels(c.model.weight, c.n, substream_seed(c.seed, t));
    std::vector<std::uint64_t> counts(k, 0);
    for (auto z : labels.z) ++counts[z - 1];
    bool bad = false;
    double worst_ratio = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < k; ++i) {
      const double expected = static_cast<double>(c.n) * c.model.weight[i];
      if (static_cast<double>(counts[i]) < expected / 2.0) bad = true;
      if (expected > 0.0)
        worst_ratio = std::min(worst_ratio, static_cast<double>(counts[i]) / expected);
    }
    return TrialStat{t, worst_ratio, bad};
  });
  return out;
}

}  // namespace

McOutcome run_experiment(const McConfig& config) {
  config.model.validate();
  if (config.experiment == "lemma1") return mc_total_correlation(config, /*mixture=*/true);
  if (config.experiment == "lemma2") return mc_total_correlation(config, /*mixture=*/false);
  if (config.experiment == "lemma3_mixture") return mc_mtc(config, /*mixture=*/true);
  if (config.experiment == "lemma3_pure") return mc_mtc(config, /*mixture=*/false);
  if (config.experiment == "min_cluster") return mc_min_cluster(config);
  throw ValidationError("unknown experiment '" + config.experiment + "'");
}

McConfig mc_config_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  McConfig c;
  c.experiment = j.value("experiment", "");
  const auto& jm = j.at("model");
  c.model = BmmParams::make(jm.at("p").get<std::vector<std::vector<double>>>(),
                            jm.at("w").get<std::vector<double>>());
  c.alpha = j.value("alpha", 0.0);
  c.delta = j.value("delta", 0.0);
  c.epsilon = j.value("epsilon", 0.0);
  if (j.contains("tau") && !j.at("tau").is_null()) c.tau = j.at("tau").get<double>();
  if (j.contains("tau_k") && !j.at("tau_k").is_null()) c.tau_k = j.at("tau_k").get<double>();
  if (j.contains("columns") && !j.at("columns").is_null())
    c.columns = j.at("columns").get<std::vector<std::size_t>>();
  c.d = j.value("d", 0);
  c.n = j.at("n").get<std::uint64_t>();
  c.trials = j.at("trials").get<std::uint64_t>();
  c.seed = j.at("seed").get<std::uint64_t>();
  c.threads = j.value("threads", 1);
  c.allow_precondition_failure = j.value("allow_precondition_failure", false);
  c.dim_cap = j.value("dim_cap", kDefaultDimCap);
  return c;
}

const char* to_string(McPass pass) {
  switch (pass) {
    case McPass::kPass: return "pass";
    case McPass::kFail: return "fail";
    default: return "not_applicable";
  }
}

std::string mc_outcome_to_json(const McOutcome& o) {
  JsonWriter w;
  w.begin_object()
      .kv("experiment", o.experiment)
      .kv("hits", o.hits)
      .kv("trials", o.trials)
      .kv("frequency", o.frequency)
      .kv("cp99_lower", o.cp99_lower)
      .kv("cp99_upper", o.cp99_upper)
      .kv("bound", o.bound)
      .kv("bound_vacuous", o.bound_vacuous)
      .kv("pass", to_string(o.pass))
      .kv("tau", o.tau_used)
      .kv("d", o.d_used)
      .kv("l_sep", o.l_sep_used)
      .kv("precondition_ok", o.precondition_ok)
      .kv("precondition_note", o.precondition_note)
      .end_object();
  return w.str();
}

std::string per_trial_csv(const McOutcome& o) {
  std::string out = "trial,statistic,bad_event\n";
  for (const auto& t : o.per_trial) {
    out += std::to_string(t.index);
    out += ',';
    out += format_real(t.statistic);
    out += ',';
    out += t.bad_event ? '1' : '0';
    out += '\n';
  }
  return out;
}

}  // namespace bmmtc
