#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bmmtc/common.hpp"

namespace bmmtc {

/// Ground-truth mixture: K frequency rows over L columns plus mixing weights.
struct BmmParams {
  std::size_t components = 0;  // K
  std::size_t dimension = 0;   // L
  std::vector<double> freq;    // row-major K x L, entries in [0,1]
  std::vector<double> weight;  // length K, nonnegative, sums to 1

  double p(std::size_t k, std::size_t l) const { return freq[k * dimension + l]; }
  double& p(std::size_t k, std::size_t l) { return freq[k * dimension + l]; }

  static BmmParams make(const std::vector<std::vector<double>>& rows,
                        const std::vector<double>& weights);

  /// Throws ValidationError unless all invariants hold.
  void validate() const;

  /// Content hash over a canonical rendering of (K, L, P, w); hex string.
  std::string digest() const;
};

/// H(Bern(p)) in nats, with 0 ln 0 = 0.
double entropy_bernoulli(double p);

/// Shannon entropy of a discrete distribution in nats.
double entropy_discrete(std::span<const double> w);

/// Two-point KL divergence x ln(x/y) + (1-x) ln((1-x)/(1-y)) in nats.
/// Total on the reals: returns +infinity for x outside [0,1] and when a
/// nonzero coefficient divides by zero.
double kl_bernoulli(double x, double y);

/// tau = (epsilon/2) (1 + ln(k/epsilon)); k may be fractional (1/alpha).
double pureness_threshold(double epsilon, double k);

/// beta = tau^2 / (d^4 2^(d+1)).
double beta_coefficient(double tau, int d);

/// User inputs plus the derived sub-dimension, threshold and exponent coefficient.
struct AlgoParams {
  double alpha = 0;    // minimum cluster weight, (0,1]
  double delta = 0;    // separation margin, (0,1]
  double epsilon = 0;  // impurity tolerance, (0,1)
  int l_sep = 0;       // informative-dimension count
  int d = 0;           // sub-dimension actually used
  double tau = 0;      // pureness threshold, nats
  double beta = 0;     // concentration exponent coefficient

  /// True when tau is at or above the largest attainable total correlation
  /// (d-1) ln 2, making the pureness test vacuous.
  bool tau_vacuous() const;
};

/// Real-valued sub-dimension formula before the ceiling.
double sub_dimension_raw(double alpha, double delta, double epsilon);

/// Derives (d, tau, beta) from user inputs. d comes from the ceiling of the
/// formula unless overridden. Throws InfeasibleDimensionError when d exceeds
/// the joint-table cap or the informative-dimension count.
AlgoParams derive_algo_params(double alpha, double delta, double epsilon, int l_sep,
                              std::optional<int> d_override = std::nullopt,
                              int dim_cap = kDefaultDimCap);

/// Flat JSON object with keys alpha, delta, epsilon, l_sep, d, tau, beta.
std::string algo_params_to_json(const AlgoParams& p);
AlgoParams algo_params_from_json(const std::string& text);

}  // namespace bmmtc
