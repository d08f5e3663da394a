#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "bmmtc/core.hpp"
#include "bmmtc/dataset.hpp"

namespace bmmtc {

/// Counts over all 2^d outcomes of a d-column sub-matrix; outcome x is the
/// binary row read as an integer with column 0 as the least significant bit.
struct EmpiricalJoint {
  int d = 0;
  std::uint64_t m = 0;
  std::vector<std::uint64_t> counts;  // length 2^d, sums to m
};

struct MarginalFreqs {
  std::vector<std::uint64_t> ones;  // integer column sums
  std::vector<double> p_hat;        // ones[l] / m
};

struct MtcResult {
  double value = 0.0;
  std::vector<std::size_t> argmax_columns;  // sorted, size d
  std::uint64_t subsets_examined = 0;
  bool exhaustive = true;
};

EmpiricalJoint empirical_joint(const Dataset& q, std::span<const std::size_t> cols,
                               int dim_cap = kDefaultDimCap);
EmpiricalJoint empirical_joint(const Dataset& q, int dim_cap = kDefaultDimCap);

MarginalFreqs marginal_freqs(const EmpiricalJoint& joint);

/// Empirical total correlation: KL between the joint type and the product of
/// marginal types, in nats. Finite for every input; zero-count outcomes
/// contribute nothing.
double total_correlation(const EmpiricalJoint& joint);
double total_correlation(const Dataset& q, std::span<const std::size_t> cols,
                         int dim_cap = kDefaultDimCap);
double total_correlation(const Dataset& q, int dim_cap = kDefaultDimCap);

/// Same quantity via sum of marginal entropies minus joint entropy; kept as an
/// independent computation path for cross-checks.
double total_correlation_via_entropies(const EmpiricalJoint& joint);
double total_correlation_via_entropies(const Dataset& q, std::span<const std::size_t> cols,
                                       int dim_cap = kDefaultDimCap);
double total_correlation_via_entropies(const Dataset& q, int dim_cap = kDefaultDimCap);

/// Maximum total correlation over d-column subsets. Without a budget every
/// C(L,d) subset is examined in lexicographic order and ties keep the first
/// attaining subset; with a budget b < C(L,d), b distinct subsets come from a
/// seeded stream and the result is marked non-exhaustive. Subset evaluations
/// may run on several threads; the reduction is order-independent.
MtcResult max_total_correlation(const Dataset& y, int d,
                                std::optional<std::uint64_t> budget = std::nullopt,
                                std::uint64_t seed = 0, int threads = 1,
                                int dim_cap = kDefaultDimCap);

/// Large-sample limit of the total correlation of samples from the model,
/// restricted to the given columns: exact KL between the mixture law and the
/// product law of the averaged frequencies, enumerated over 2^d outcomes.
double asymptotic_total_correlation(const BmmParams& model, std::span<const std::size_t> cols,
                                    int dim_cap = kDefaultDimCap);
double asymptotic_total_correlation(const BmmParams& model, int dim_cap = kDefaultDimCap);

/// C(n,k) saturated at cap.
std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k, std::uint64_t cap);

/// Lexicographic rank -> sorted column subset (combinadic unranking).
std::vector<std::size_t> combination_at_rank(std::size_t l, int d, std::uint64_t rank);

}  // namespace bmmtc
