#include "bmmtc/measures.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_set>

#include "bmmtc/rng.hpp"

namespace bmmtc {

namespace {

void check_dim(std::size_t d, int dim_cap) {
  if (d < 1) throw ValidationError("sub-dimension must be at least 1");
  if (static_cast<int>(d) > dim_cap)
    throw InfeasibleDimensionError("sub-dimension " + std::to_string(d) +
                                   " exceeds the joint-table cap " + std::to_string(dim_cap));
}

std::vector<std::size_t> all_columns(const Dataset& q) {
  std::vector<std::size_t> cols(q.cols());
  std::iota(cols.begin(), cols.end(), std::size_t{0});
  return cols;
}

}  // namespace

EmpiricalJoint empirical_joint(const Dataset& q, std::span<const std::size_t> cols,
                               int dim_cap) {
  check_dim(cols.size(), dim_cap);
  if (q.rows() < 1) throw ValidationError("empty sub-matrix");
  for (std::size_t c : cols)
    if (c >= q.cols()) throw ValidationError("column index out of range");

  EmpiricalJoint joint;
  joint.d = static_cast<int>(cols.size());
  joint.m = q.rows();
  joint.counts.assign(std::size_t{1} << joint.d, 0);
  for (std::size_t i = 0; i < q.rows(); ++i) ++joint.counts[q.outcome_index(i, cols)];
  return joint;
}

EmpiricalJoint empirical_joint(const Dataset& q, int dim_cap) {
  return empirical_joint(q, all_columns(q), dim_cap);
}

MarginalFreqs marginal_freqs(const EmpiricalJoint& joint) {
  MarginalFreqs mf;
  mf.ones.assign(joint.d, 0);
  for (std::size_t x = 0; x < joint.counts.size(); ++x) {
    if (joint.counts[x] == 0) continue;
    for (int l = 0; l < joint.d; ++l)
      if ((x >> l) & 1) mf.ones[l] += joint.counts[x];
  }
  mf.p_hat.resize(joint.d);
  for (int l = 0; l < joint.d; ++l)
    mf.p_hat[l] = static_cast<double>(mf.ones[l]) / static_cast<double>(joint.m);
  return mf;
}

double total_correlation(const EmpiricalJoint& joint) {
  const auto mf = marginal_freqs(joint);
  const double log_m = std::log(static_cast<double>(joint.m));
  // (1/m) sum_x c_x [ln c_x + (d-1) ln m - sum_l ln(count of x_l in column l)]
  // Marginal counts never vanish where c_x > 0, so every term is finite.
  double acc = 0.0;
  for (std::size_t x = 0; x < joint.counts.size(); ++x) {
    const std::uint64_t c = joint.counts[x];
    if (c == 0) continue;
    double term = std::log(static_cast<double>(c)) + (joint.d - 1) * log_m;
    for (int l = 0; l < joint.d; ++l) {
      const std::uint64_t side = ((x >> l) & 1) ? mf.ones[l] : joint.m - mf.ones[l];
      term -= std::log(static_cast<double>(side));
    }
    acc += static_cast<double>(c) * term;
  }
  // rounding can leave a tiny negative residue on exactly factorizing inputs
  const double v = acc / static_cast<double>(joint.m);
  return v <= 0.0 ? 0.0 : v;
}

double total_correlation(const Dataset& q, std::span<const std::size_t> cols, int dim_cap) {
  return total_correlation(empirical_joint(q, cols, dim_cap));
}

double total_correlation(const Dataset& q, int dim_cap) {
  return total_correlation(empirical_joint(q, dim_cap));
}

double total_correlation_via_entropies(const EmpiricalJoint& joint) {
  const auto mf = marginal_freqs(joint);
  double acc = 0.0;
  for (double p : mf.p_hat) acc += entropy_bernoulli(p);
  const double m = static_cast<double>(joint.m);
  double joint_entropy = 0.0;
  for (std::uint64_t c : joint.counts) {
    if (c == 0) continue;
    const double p = static_cast<double>(c) / m;
    joint_entropy -= p * std::log(p);
  }
  const double v = acc - joint_entropy;
  return v <= 0.0 ? 0.0 : v;
}

double total_correlation_via_entropies(const Dataset& q, std::span<const std::size_t> cols,
                                       int dim_cap) {
  return total_correlation_via_entropies(empirical_joint(q, cols, dim_cap));
}

double total_correlation_via_entropies(const Dataset& q, int dim_cap) {
  return total_correlation_via_entropies(empirical_joint(q, dim_cap));
}

std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k, std::uint64_t cap) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  // acc * (n-k+i) / i is integral at every step; 128-bit keeps it exact
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;
    if (acc >= cap) return cap;
  }
  return static_cast<std::uint64_t>(acc);
}

std::vector<std::size_t> combination_at_rank(std::size_t l, int d, std::uint64_t rank) {
  // lexicographic unranking: choose the smallest feasible first element, etc.
  std::vector<std::size_t> cols;
  cols.reserve(d);
  std::size_t next = 0;
  std::uint64_t remaining = rank;
  for (int j = d; j >= 1; --j) {
    for (std::size_t c = next;; ++c) {
      const std::uint64_t block =
          binomial_capped(l - c - 1, static_cast<std::uint64_t>(j - 1), UINT64_MAX);
      if (remaining < block) {
        cols.push_back(c);
        next = c + 1;
        break;
      }
      remaining -= block;
    }
  }
  return cols;
}

namespace {

struct SubsetBest {
  double value = -1.0;
  std::uint64_t rank = UINT64_MAX;
};

}  // namespace

MtcResult max_total_correlation(const Dataset& y, int d, std::optional<std::uint64_t> budget,
                                std::uint64_t seed, int threads, int dim_cap) {
  check_dim(d, dim_cap);
  if (static_cast<std::size_t>(d) > y.cols())
    throw InfeasibleDimensionError("sub-dimension " + std::to_string(d) + " exceeds column count " +
                                   std::to_string(y.cols()));
  if (budget && *budget < 1) throw ValidationError("subset budget must be at least 1");

  const std::uint64_t total = binomial_capped(y.cols(), d, UINT64_MAX);

  MtcResult res;
  if (!budget || *budget >= total) {
    // exhaustive sweep in lexicographic order; ties keep the lowest rank
    res.exhaustive = true;
    res.subsets_examined = total;
    const std::uint64_t nthreads =
        std::max<std::uint64_t>(1, std::min<std::uint64_t>(resolve_threads(threads), total));
    std::vector<SubsetBest> best(nthreads);
    const std::uint64_t chunk = (total + nthreads - 1) / nthreads;
    parallel_for_index(nthreads, static_cast<int>(nthreads), [&](std::size_t t) {
      const std::uint64_t lo = t * chunk;
      const std::uint64_t hi = std::min<std::uint64_t>(total, lo + chunk);
      if (lo >= hi) return;
      std::vector<std::size_t> cols = combination_at_rank(y.cols(), d, lo);
      SubsetBest local;
      for (std::uint64_t r = lo; r < hi; ++r) {
        const double v = total_correlation(y, cols, dim_cap);
        if (v > local.value) local = {v, r};
        // advance to the next lexicographic d-combination of {0..L-1}
        int j = d - 1;
        while (j >= 0 && cols[j] == y.cols() - d + j) --j;
        if (j < 0) break;
        ++cols[j];
        for (int t2 = j + 1; t2 < d; ++t2) cols[t2] = cols[t2 - 1] + 1;
      }
      best[t] = local;
    });
    SubsetBest win;
    for (const auto& b : best)
      if (b.value > win.value || (b.value == win.value && b.rank < win.rank)) win = b;
    res.value = win.value;
    res.argmax_columns = combination_at_rank(y.cols(), d, win.rank);
  } else {
    // sampled subsets without replacement from a seeded stream
    res.exhaustive = false;
    res.subsets_examined = *budget;
    SplitMix64 rng(seed);
    std::unordered_set<std::uint64_t> seen;
    std::vector<std::size_t> cols(d);
    SubsetBest win;
    std::uint64_t order = 0;
    while (seen.size() < *budget) {
      // draw d distinct columns, canonicalize, encode as lexicographic rank
      std::unordered_set<std::size_t> pick;
      while (pick.size() < static_cast<std::size_t>(d))
        pick.insert(static_cast<std::size_t>(rng.next() % y.cols()));
      cols.assign(pick.begin(), pick.end());
      std::sort(cols.begin(), cols.end());
      std::uint64_t rank = 0;
      std::size_t prev = 0;
      for (int j = 0; j < d; ++j) {
        for (std::size_t c = prev; c < cols[j]; ++c)
          rank += binomial_capped(y.cols() - c - 1, static_cast<std::uint64_t>(d - j - 1),
                                  UINT64_MAX);
        prev = cols[j] + 1;
      }
      if (!seen.insert(rank).second) continue;
      const double v = total_correlation(y, cols, dim_cap);
      if (v > win.value) {
        win.value = v;
        win.rank = order;
        res.argmax_columns = cols;
      }
      ++order;
    }
    res.value = win.value;
  }
  return res;
}

double asymptotic_total_correlation(const BmmParams& model, std::span<const std::size_t> cols,
                                    int dim_cap) {
  model.validate();
  check_dim(cols.size(), dim_cap);
  for (std::size_t c : cols)
    if (c >= model.dimension) throw ValidationError("column index out of range");

  const int d = static_cast<int>(cols.size());
  std::vector<double> pbar(d, 0.0);
  for (int l = 0; l < d; ++l)
    for (std::size_t k = 0; k < model.components; ++k)
      pbar[l] += model.weight[k] * model.p(k, cols[l]);

  double acc = 0.0;
  for (std::size_t x = 0; x < (std::size_t{1} << d); ++x) {
    double mix = 0.0;
    for (std::size_t k = 0; k < model.components; ++k) {
      double prod = model.weight[k];
      for (int l = 0; l < d && prod != 0.0; ++l) {
        const double p = model.p(k, cols[l]);
        prod *= ((x >> l) & 1) ? p : 1.0 - p;
      }
      mix += prod;
    }
    if (mix == 0.0) continue;
    double prod_mean = 1.0;
    for (int l = 0; l < d; ++l) prod_mean *= ((x >> l) & 1) ? pbar[l] : 1.0 - pbar[l];
    acc += mix * std::log(mix / prod_mean);
  }
  return acc <= 0.0 ? 0.0 : acc;
}

double asymptotic_total_correlation(const BmmParams& model, int dim_cap) {
  std::vector<std::size_t> cols(model.dimension);
  std::iota(cols.begin(), cols.end(), std::size_t{0});
  return asymptotic_total_correlation(model, cols, dim_cap);
}

}  // namespace bmmtc
