#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "bmmtc/core.hpp"
#include "bmmtc/dataset.hpp"

namespace bmmtc {

/// Search-space constraints: at most kappa_max blocks, each of size >= min_block.
struct PartitionConstraints {
  std::size_t n = 0;
  int kappa_max = 0;         // ceil(1/alpha)
  std::size_t min_block = 0; // ceil(alpha n / 2)

  static PartitionConstraints from_algo(std::size_t n, double alpha);
};

/// Number of set partitions of n items into exactly kappa blocks of size >=
/// min_block, saturated at cap.
std::uint64_t count_partitions(std::size_t n, int kappa, std::size_t min_block,
                               std::uint64_t cap = UINT64_MAX);

/// Visits every partition of {1..n} into exactly kappa blocks of size >=
/// min_block, once each, in restricted-growth-string lexicographic order.
/// Labels are canonical (first-occurrence order, 1-based). The visitor returns
/// false to stop; the function returns false iff stopped early.
bool enumerate_partitions(const PartitionConstraints& c, int kappa,
                          const std::function<bool(const Labeling&)>& visit);

/// Sub-matrix k holds exactly the rows with label k+1, original order kept.
std::vector<Dataset> split_by_labeling(const Dataset& x, const Labeling& z);

struct ClusterOptions {
  std::uint64_t search_cap = kDefaultSearchCap;
  std::optional<std::uint64_t> mtc_budget;
  std::uint64_t mtc_seed = 0;
  int threads = 1;
  int dim_cap = kDefaultDimCap;
};

struct ClusterRun {
  std::optional<Labeling> result;
  std::optional<int> accepted_kappa;
  std::uint64_t partitions_tested = 0;
  std::uint64_t mtc_evaluations = 0;
  std::vector<double> accepted_cluster_mtc;  // per-cluster MTC of the accepted partition
};

/// Exhaustive search: kappa = 1..ceil(1/alpha), partitions in RGS order,
/// accept the first whose every cluster has MTC <= tau. Empty result when no
/// candidate passes. Throws SearchCapError when the candidate count exceeds
/// the cap, InfeasibleDimensionError when d does not fit.
ClusterRun cluster_algorithm1(const Dataset& x, const AlgoParams& params,
                              const ClusterOptions& opts = {});

}  // namespace bmmtc
