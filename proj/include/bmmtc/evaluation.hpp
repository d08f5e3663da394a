#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "bmmtc/core.hpp"
#include "bmmtc/dataset.hpp"

namespace bmmtc {

struct PairSeparation {
  std::size_t k1 = 0, k2 = 0;  // unordered row pair, k1 < k2
  std::size_t count = 0;       // columns where the rows differ by >= delta
};

struct SeparabilityReport {
  double delta = 0.0;
  std::vector<PairSeparation> per_pair_counts;
  std::size_t l_sep = 0;  // minimum over pairs; the largest L for which P is (L,delta)-separable
  bool single_component_convention = false;  // K=1: l_sep = L by convention
};

/// True when some truth label covers at least a (1-eps) fraction of the
/// cluster. The boundary accepts: comparison carries a 1e-12 slack.
bool is_eps_pure(std::span<const std::size_t> cluster_rows, const Labeling& truth,
                 double epsilon);

/// True when every output cluster is eps-pure under the truth labels.
bool is_eps_correct(const Labeling& z, const Labeling& truth, double epsilon);

/// Max over output clusters of (1 - majority-truth fraction). z is
/// eps-correct iff this is <= eps, up to the same boundary slack.
double misclustering_rate(const Labeling& z, const Labeling& truth);

/// Column counts per row pair of a frequency matrix. K=1 returns l_sep = L,
/// flagged via single_component_convention.
SeparabilityReport separability(const std::vector<std::vector<double>>& p, double delta);
SeparabilityReport separability(const BmmParams& model, double delta);

}  // namespace bmmtc
