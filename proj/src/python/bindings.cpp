#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "bmmtc/clusterer.hpp"
#include "bmmtc/core.hpp"
#include "bmmtc/dataset.hpp"
#include "bmmtc/evaluation.hpp"
#include "bmmtc/experiments.hpp"
#include "bmmtc/measures.hpp"
#include "bmmtc/rng.hpp"
#include "bmmtc/sampler.hpp"
#include "bmmtc/theory.hpp"

namespace py = pybind11;
using namespace bmmtc;

namespace {

using BitArray = py::array_t<std::uint8_t, py::array::c_style | py::array::forcecast>;

Dataset dataset_from_array(const BitArray& x) {
  if (x.ndim() != 2) throw ValidationError("expected a 2-d array of 0/1");
  Dataset ds(static_cast<std::size_t>(x.shape(0)), static_cast<std::size_t>(x.shape(1)));
  const auto view = x.unchecked<2>();
  for (py::ssize_t i = 0; i < x.shape(0); ++i)
    for (py::ssize_t j = 0; j < x.shape(1); ++j) {
      const auto v = view(i, j);
      if (v > 1) throw ValidationError("dataset entries must be 0 or 1");
      if (v) ds.set(static_cast<std::size_t>(i), static_cast<std::size_t>(j), true);
    }
  return ds;
}

py::array_t<std::uint8_t> dataset_to_array(const Dataset& ds) {
  py::array_t<std::uint8_t> out({ds.rows(), ds.cols()});
  auto view = out.mutable_unchecked<2>();
  for (std::size_t i = 0; i < ds.rows(); ++i)
    for (std::size_t j = 0; j < ds.cols(); ++j)
      view(i, j) = ds.get(i, j) ? 1 : 0;
  return out;
}

BmmParams model_from_lists(const std::vector<std::vector<double>>& p,
                           const std::vector<double>& w) {
  return BmmParams::make(p, w);
}

Labeling labeling_from_vector(const std::vector<std::uint32_t>& z) {
  Labeling l{z};
  l.validate();
  return l;
}

py::dict algo_params_dict(const AlgoParams& p) {
  py::dict d;
  d["alpha"] = p.alpha;
  d["delta"] = p.delta;
  d["epsilon"] = p.epsilon;
  d["l_sep"] = p.l_sep;
  d["d"] = p.d;
  d["tau"] = p.tau;
  d["beta"] = p.beta;
  d["tau_vacuous"] = p.tau_vacuous();
  return d;
}

}  // namespace

PYBIND11_MODULE(_bmmtc, m) {
  m.doc() = "Bernoulli mixture clustering via maximal total correlation";

  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<InfeasibleDimensionError>(m, "InfeasibleDimensionError",
                                                   PyExc_ValueError);
  py::register_exception<SearchCapError>(m, "SearchCapError", PyExc_RuntimeError);

  m.attr("DEFAULT_DIM_CAP") = kDefaultDimCap;
  m.attr("DEFAULT_SEARCH_CAP") = kDefaultSearchCap;

  m.def(
      "sample",
      [](const std::vector<std::vector<double>>& p, const std::vector<double>& w, std::size_t n,
         std::uint64_t seed, int threads) {
        const auto s = sample_bmm(model_from_lists(p, w), n, seed, resolve_threads(threads));
        py::array_t<std::uint32_t> truth(s.truth.size());
        auto view = truth.mutable_unchecked<1>();
        for (std::size_t i = 0; i < s.truth.size(); ++i) view(i) = s.truth.z[i];
        return py::make_tuple(dataset_to_array(s.data), truth, s.params_digest);
      },
      py::arg("p"), py::arg("w"), py::arg("n"), py::arg("seed"), py::arg("threads") = 1,
      "Draw n labeled rows; returns (bits, truth_labels, params_digest).");

  m.def(
      "log_likelihood",
      [](const std::vector<std::vector<double>>& p, const std::vector<double>& w,
         const std::vector<int>& x) { return bmm_log_likelihood(model_from_lists(p, w), x); },
      py::arg("p"), py::arg("w"), py::arg("x"));

  m.def(
      "total_correlation",
      [](const BitArray& x, std::optional<std::vector<std::size_t>> columns, int dim_cap) {
        const auto ds = dataset_from_array(x);
        return columns ? total_correlation(ds, *columns, dim_cap)
                       : total_correlation(ds, dim_cap);
      },
      py::arg("x"), py::arg("columns") = py::none(), py::arg("dim_cap") = kDefaultDimCap);

  m.def(
      "total_correlation_via_entropies",
      [](const BitArray& x, std::optional<std::vector<std::size_t>> columns, int dim_cap) {
        const auto ds = dataset_from_array(x);
        return columns ? total_correlation_via_entropies(ds, *columns, dim_cap)
                       : total_correlation_via_entropies(ds, dim_cap);
      },
      py::arg("x"), py::arg("columns") = py::none(), py::arg("dim_cap") = kDefaultDimCap);

  m.def(
      "max_total_correlation",
      [](const BitArray& x, int d, std::optional<std::uint64_t> budget, std::uint64_t seed,
         int threads, int dim_cap) {
        const auto r = max_total_correlation(dataset_from_array(x), d, budget, seed,
                                             resolve_threads(threads), dim_cap);
        py::dict out;
        out["value"] = r.value;
        out["columns"] = r.argmax_columns;
        out["subsets_examined"] = r.subsets_examined;
        out["exhaustive"] = r.exhaustive;
        return out;
      },
      py::arg("x"), py::arg("d"), py::arg("budget") = py::none(), py::arg("seed") = 0,
      py::arg("threads") = 1, py::arg("dim_cap") = kDefaultDimCap);

  m.def(
      "asymptotic_total_correlation",
      [](const std::vector<std::vector<double>>& p, const std::vector<double>& w,
         std::optional<std::vector<std::size_t>> columns, int dim_cap) {
        const auto model = model_from_lists(p, w);
        return columns ? asymptotic_total_correlation(model, *columns, dim_cap)
                       : asymptotic_total_correlation(model, dim_cap);
      },
      py::arg("p"), py::arg("w"), py::arg("columns") = py::none(),
      py::arg("dim_cap") = kDefaultDimCap);

  m.def(
      "derive_algo_params",
      [](double alpha, double delta, double epsilon, int l_sep, std::optional<int> d,
         int dim_cap) {
        return algo_params_dict(derive_algo_params(alpha, delta, epsilon, l_sep, d, dim_cap));
      },
      py::arg("alpha"), py::arg("delta"), py::arg("epsilon"), py::arg("l_sep"),
      py::arg("d") = py::none(), py::arg("dim_cap") = kDefaultDimCap);

  m.def(
      "cluster",
      [](const BitArray& x, double alpha, double delta, double epsilon, int l_sep,
         std::optional<int> d, std::uint64_t search_cap, std::optional<std::uint64_t> mtc_budget,
         std::uint64_t mtc_seed, int threads, int dim_cap) {
        const auto params = derive_algo_params(alpha, delta, epsilon, l_sep, d, dim_cap);
        ClusterOptions opts;
        opts.search_cap = search_cap;
        opts.mtc_budget = mtc_budget;
        opts.mtc_seed = mtc_seed;
        opts.threads = resolve_threads(threads);
        opts.dim_cap = dim_cap;
        const auto run = cluster_algorithm1(dataset_from_array(x), params, opts);
        py::dict out;
        out["params"] = algo_params_dict(params);
        out["accepted"] = run.result.has_value();
        out["labels"] = run.result ? py::cast(run.result->z) : py::none();
        out["accepted_kappa"] = run.accepted_kappa ? py::cast(*run.accepted_kappa) : py::none();
        out["partitions_tested"] = run.partitions_tested;
        out["mtc_evaluations"] = run.mtc_evaluations;
        out["cluster_mtc"] = run.accepted_cluster_mtc;
        return out;
      },
      py::arg("x"), py::arg("alpha"), py::arg("delta"), py::arg("epsilon"), py::arg("l_sep"),
      py::arg("d") = py::none(), py::arg("search_cap") = kDefaultSearchCap,
      py::arg("mtc_budget") = py::none(), py::arg("mtc_seed") = 0, py::arg("threads") = 1,
      py::arg("dim_cap") = kDefaultDimCap);

  m.def(
      "is_eps_correct",
      [](const std::vector<std::uint32_t>& z, const std::vector<std::uint32_t>& truth,
         double epsilon) {
        return is_eps_correct(labeling_from_vector(z), labeling_from_vector(truth), epsilon);
      },
      py::arg("z"), py::arg("truth"), py::arg("epsilon"));

  m.def(
      "misclustering_rate",
      [](const std::vector<std::uint32_t>& z, const std::vector<std::uint32_t>& truth) {
        return misclustering_rate(labeling_from_vector(z), labeling_from_vector(truth));
      },
      py::arg("z"), py::arg("truth"));

  m.def(
      "separability",
      [](const std::vector<std::vector<double>>& p, double delta) {
        const auto rep = separability(p, delta);
        py::dict out;
        out["delta"] = rep.delta;
        out["l_sep"] = rep.l_sep;
        py::list pairs;
        for (const auto& pc : rep.per_pair_counts)
          pairs.append(py::make_tuple(pc.k1, pc.k2, pc.count));
        out["per_pair_counts"] = pairs;
        out["single_component_convention"] = rep.single_component_convention;
        return out;
      },
      py::arg("p"), py::arg("delta"));

  m.def("bound_mixture_low_tc", &bound_mixture_low_tc, py::arg("n"), py::arg("d"),
        py::arg("tau"));
  m.def("bound_pure_high_tc", &bound_pure_high_tc, py::arg("n"), py::arg("d"), py::arg("tau"));
  m.def("bound_mtc_mixture", &bound_mtc_mixture, py::arg("n"), py::arg("l_sep"), py::arg("d"),
        py::arg("tau"));
  m.def("bound_mtc_pure", &bound_mtc_pure, py::arg("n"), py::arg("big_l"), py::arg("d"),
        py::arg("tau"));
  m.def("min_cluster_bound", &min_cluster_bound, py::arg("k"), py::arg("alpha"), py::arg("n"));
  m.def("min_n_for_cluster_sizes", &min_n_for_cluster_sizes, py::arg("alpha"), py::arg("k"),
        py::arg("zeta"));
  m.def(
      "theorem1_thresholds",
      [](double alpha, double delta, double epsilon, double zeta, double big_l, double b_const,
         double c_const) {
        const auto t = theorem1_thresholds(alpha, delta, epsilon, zeta, big_l, b_const, c_const);
        return py::make_tuple(t.l_sep_min, t.n_min);
      },
      py::arg("alpha"), py::arg("delta"), py::arg("epsilon"), py::arg("zeta"), py::arg("big_l"),
      py::arg("b_const") = 1.0, py::arg("c_const") = 1.0);

  m.def(
      "run_experiment",
      [](const std::string& config_json) {
        const auto outcome = run_experiment(mc_config_from_json(config_json));
        py::dict out;
        out["experiment"] = outcome.experiment;
        out["hits"] = outcome.hits;
        out["trials"] = outcome.trials;
        out["frequency"] = outcome.frequency;
        out["cp99_lower"] = outcome.cp99_lower;
        out["cp99_upper"] = outcome.cp99_upper;
        out["bound"] = outcome.bound;
        out["bound_vacuous"] = outcome.bound_vacuous;
        out["pass"] = std::string(to_string(outcome.pass));
        out["tau"] = outcome.tau_used;
        out["d"] = outcome.d_used;
        out["l_sep"] = outcome.l_sep_used;
        out["precondition_ok"] = outcome.precondition_ok;
        out["precondition_note"] = outcome.precondition_note;
        return out;
      },
      py::arg("config_json"), "Run a Monte Carlo experiment from a JSON config string.");
}
