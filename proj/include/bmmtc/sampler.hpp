#pragma once

#include <cstdint>
#include <span>
#include <string>

#include "bmmtc/core.hpp"
#include "bmmtc/dataset.hpp"

namespace bmmtc {

struct LabeledDataset {
  Dataset data;
  Labeling truth;
  std::uint64_t seed = 0;
  std::string params_digest;
};

/// Draws n i.i.d. rows: component via inverse-CDF on w, then independent
/// Bernoulli bits with that component's frequencies. Row i consumes only the
/// SplitMix64 substream (seed, i), so output is identical for any thread count.
LabeledDataset sample_bmm(const BmmParams& model, std::size_t n, std::uint64_t seed,
                          int threads = 1);

/// Component draws alone, same per-row streams as sample_bmm.
Labeling sample_labels(std::span<const double> w, std::size_t n, std::uint64_t seed);

/// Inverse-CDF draw: smallest k with w_1+...+w_k >= u (ties toward the lower index).
std::uint32_t inverse_cdf_label(std::span<const double> w, double u);

/// ln sum_k w_k prod_l p_kl^x_l (1-p_kl)^(1-x_l), via log-sum-exp.
/// Returns -infinity when the outcome has probability zero.
double bmm_log_likelihood(const BmmParams& model, std::span<const int> x);

}  // namespace bmmtc
