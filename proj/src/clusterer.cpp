#include "bmmtc/clusterer.hpp"

#include <algorithm>
#include <cmath>

#include "bmmtc/measures.hpp"

namespace bmmtc {

PartitionConstraints PartitionConstraints::from_algo(std::size_t n, double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw ValidationError("alpha must lie in (0,1]");
  if (n < 1) throw ValidationError("dataset needs at least one row");
  PartitionConstraints c;
  c.n = n;
  c.kappa_max = static_cast<int>(ceil_tol(1.0 / alpha));
  c.min_block = static_cast<std::size_t>(std::max(1LL, ceil_tol(alpha * n / 2.0)));
  return c;
}

std::uint64_t count_partitions(std::size_t n, int kappa, std::size_t min_block,
                               std::uint64_t cap) {
  if (kappa < 0) return 0;
  const std::size_t m = std::max<std::size_t>(1, min_block);
  const std::size_t k = static_cast<std::size_t>(kappa);
  if (k * m > n) return 0;
  if (k == 0) return n == 0 ? 1 : 0;

  auto sat_add = [cap](std::uint64_t a, std::uint64_t b) {
    return (a >= cap || b >= cap || a + b >= cap) ? cap : a + b;
  };
  auto sat_mul = [cap](std::uint64_t a, std::uint64_t b) {
    if (a == 0 || b == 0) return std::uint64_t{0};
    if (a >= cap || b >= cap || a > cap / b) return cap;
    return a * b;
  };

  // T(i,j): partitions of i items into j blocks of size >= m.
  // The block holding the last item either extends a partition of i-1 items
  // (j choices) or is freshly assembled from the last item plus m-1 of the
  // remaining i-1 items.
  std::vector<std::vector<std::uint64_t>> t(n + 1, std::vector<std::uint64_t>(k + 1, 0));
  t[0][0] = 1;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= k; ++j) {
      std::uint64_t v = sat_mul(j, t[i - 1][j]);
      if (i >= m) {
        const std::uint64_t ways = binomial_capped(i - 1, m - 1, cap);
        v = sat_add(v, sat_mul(ways, t[i - m][j - 1]));
      }
      t[i][j] = v;
    }
  }
  return t[n][k];
}

namespace {

struct RgsState {
  std::size_t n;
  int kappa;
  std::size_t min_block;
  std::vector<std::uint32_t> labels;      // 1-based canonical labels
  std::vector<std::size_t> block_count;   // size kappa
  const std::function<bool(const Labeling&)>* visit;
  Labeling scratch;

  /// True while enumeration should continue.
  bool extend(std::size_t pos, int used) {
    if (pos == n) {
      if (used != kappa) return true;
      scratch.z = labels;
      return (*visit)(scratch);
    }
    const std::size_t remaining = n - pos;
    const int max_label = std::min(used + 1, kappa);
    for (int a = 1; a <= max_label; ++a) {
      const int new_used = std::max(used, a);
      ++block_count[a - 1];
      // feasibility: remaining items must fill every open block to min_block
      // and supply min_block items to each block not yet opened
      std::size_t deficit = static_cast<std::size_t>(kappa - new_used) * min_block;
      for (int b = 0; b < new_used; ++b)
        deficit += block_count[b] < min_block ? min_block - block_count[b] : 0;
      if (deficit <= remaining - 1) {
        labels[pos] = static_cast<std::uint32_t>(a);
        if (!extend(pos + 1, new_used)) {
          --block_count[a - 1];
          return false;
        }
      }
      --block_count[a - 1];
    }
    return true;
  }
};

}  // namespace

bool enumerate_partitions(const PartitionConstraints& c, int kappa,
                          const std::function<bool(const Labeling&)>& visit) {
  if (kappa < 1 || kappa > c.kappa_max) throw ValidationError("kappa outside 1..kappa_max");
  if (static_cast<std::size_t>(kappa) * c.min_block > c.n) return true;  // empty stream
  RgsState st{c.n, kappa, std::max<std::size_t>(1, c.min_block),
              std::vector<std::uint32_t>(c.n, 0), std::vector<std::size_t>(kappa, 0), &visit, {}};
  return st.extend(0, 0);
}

std::vector<Dataset> split_by_labeling(const Dataset& x, const Labeling& z) {
  z.validate();
  if (z.size() != x.rows()) throw ValidationError("labeling length does not match row count");
  const std::uint32_t kappa = z.max_label();
  std::vector<std::vector<std::size_t>> members(kappa);
  for (std::size_t i = 0; i < z.size(); ++i) members[z.z[i] - 1].push_back(i);
  std::vector<Dataset> out;
  out.reserve(kappa);
  for (const auto& rows : members) {
    if (rows.empty()) throw ValidationError("label range has an empty cluster");
    out.push_back(x.select_rows(rows));
  }
  return out;
}

ClusterRun cluster_algorithm1(const Dataset& x, const AlgoParams& params,
                              const ClusterOptions& opts) {
  if (params.d > opts.dim_cap)
    throw InfeasibleDimensionError("sub-dimension d=" + std::to_string(params.d) +
                                   " exceeds the joint-table cap " +
                                   std::to_string(opts.dim_cap));
  if (static_cast<std::size_t>(params.d) > x.cols())
    throw InfeasibleDimensionError("sub-dimension d=" + std::to_string(params.d) +
                                   " exceeds dataset column count " + std::to_string(x.cols()));

  const auto constraints = PartitionConstraints::from_algo(x.rows(), params.alpha);

  std::uint64_t total = 0;
  for (int kappa = 1; kappa <= constraints.kappa_max; ++kappa) {
    total += count_partitions(constraints.n, kappa, constraints.min_block, opts.search_cap);
    if (total >= opts.search_cap)
      throw SearchCapError("candidate partition count reaches " + std::to_string(total) +
                               " which exceeds the search cap " +
                               std::to_string(opts.search_cap),
                           total);
  }

  ClusterRun run;
  for (int kappa = 1; kappa <= constraints.kappa_max && !run.result; ++kappa) {
    enumerate_partitions(constraints, kappa, [&](const Labeling& z) {
      ++run.partitions_tested;
      const auto clusters = split_by_labeling(x, z);
      std::vector<double> mtc_values;
      mtc_values.reserve(clusters.size());
      bool accepted = true;
      for (const auto& cluster : clusters) {
        ++run.mtc_evaluations;
        const auto mtc = max_total_correlation(cluster, params.d, opts.mtc_budget, opts.mtc_seed,
                                               opts.threads, opts.dim_cap);
        mtc_values.push_back(mtc.value);
        if (mtc.value > params.tau) {
          accepted = false;
          break;
        }
      }
      if (accepted) {
        run.result = z;
        run.accepted_kappa = kappa;
        run.accepted_cluster_mtc = std::move(mtc_values);
        return false;
      }
      return true;
    });
  }
  return run;
}

}  // namespace bmmtc
