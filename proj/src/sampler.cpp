#include "bmmtc/sampler.hpp"

#include <cmath>
#include <limits>

#include "bmmtc/rng.hpp"

namespace bmmtc {

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
}

std::uint32_t inverse_cdf_label(std::span<const double> w, double u) {
  double cdf = 0.0;
  for (std::size_t k = 0; k < w.size(); ++k) {
    cdf += w[k];
    if (cdf >= u) return static_cast<std::uint32_t>(k + 1);
  }
  return static_cast<std::uint32_t>(w.size());  // guards cdf rounding below 1
}

LabeledDataset sample_bmm(const BmmParams& model, std::size_t n, std::uint64_t seed,
                          int threads) {
  model.validate();
  if (n < 1) throw ValidationError("sample count must be positive");

  LabeledDataset out;
  out.data = Dataset(n, model.dimension);
  out.truth.z.assign(n, 0);
  out.seed = seed;
  out.params_digest = model.digest();

  const std::size_t l = model.dimension;
  parallel_for_index(n, threads, [&](std::size_t i) {
    SplitMix64 rng(substream_seed(seed, i));
    const std::uint32_t k = inverse_cdf_label(model.weight, rng.next_unit());
    out.truth.z[i] = k;
    for (std::size_t j = 0; j < l; ++j)
      if (rng.next_unit() < model.p(k - 1, j)) out.data.set(i, j, true);
  });
  return out;
}

Labeling sample_labels(std::span<const double> w, std::size_t n, std::uint64_t seed) {
  if (n < 1) throw ValidationError("sample count must be positive");
  Labeling out;
  out.z.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    SplitMix64 rng(substream_seed(seed, i));
    out.z[i] = inverse_cdf_label(w, rng.next_unit());
  }
  return out;
}

double bmm_log_likelihood(const BmmParams& model, std::span<const int> x) {
  if (x.size() != model.dimension)
    throw ValidationError("observation length " + std::to_string(x.size()) +
                          " does not match model dimension " + std::to_string(model.dimension));
  for (int v : x)
    if (v != 0 && v != 1) throw ValidationError("observation entries must be 0 or 1");

  double best = kNegInf;
  std::vector<double> lp(model.components, kNegInf);
  for (std::size_t k = 0; k < model.components; ++k) {
    if (model.weight[k] == 0.0) continue;
    double acc = std::log(model.weight[k]);
    for (std::size_t j = 0; j < model.dimension && acc != kNegInf; ++j) {
      const double p = model.p(k, j);
      const double term = x[j] ? p : 1.0 - p;
      acc = term == 0.0 ? kNegInf : acc + std::log(term);
    }
    lp[k] = acc;
    best = std::max(best, acc);
  }
  if (best == kNegInf) return kNegInf;
  double sum = 0.0;
  for (double v : lp)
    if (v != kNegInf) sum += std::exp(v - best);
  return best + std::log(sum);
}

}  // namespace bmmtc
