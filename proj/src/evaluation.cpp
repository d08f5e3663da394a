#include "bmmtc/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

namespace bmmtc {

namespace {

constexpr double kBoundarySlack = 1e-12;

std::size_t majority_count(std::span<const std::size_t> rows, const Labeling& truth) {
  std::unordered_map<std::uint32_t, std::size_t> freq;
  std::size_t best = 0;
  for (std::size_t r : rows) {
    if (r >= truth.size()) throw ValidationError("cluster row index out of range");
    best = std::max(best, ++freq[truth.z[r]]);
  }
  return best;
}

}  // namespace

bool is_eps_pure(std::span<const std::size_t> cluster_rows, const Labeling& truth,
                 double epsilon) {
  if (cluster_rows.empty()) throw ValidationError("cluster is empty");
  if (!(epsilon >= 0.0 && epsilon < 1.0)) throw ValidationError("epsilon must lie in [0,1)");
  const auto size = static_cast<double>(cluster_rows.size());
  const auto best = static_cast<double>(majority_count(cluster_rows, truth));
  return best >= size - epsilon * size - kBoundarySlack;
}

bool is_eps_correct(const Labeling& z, const Labeling& truth, double epsilon) {
  z.validate();
  truth.validate();
  if (z.size() != truth.size()) throw ValidationError("labeling lengths differ");
  std::unordered_map<std::uint32_t, std::vector<std::size_t>> clusters;
  for (std::size_t i = 0; i < z.size(); ++i) clusters[z.z[i]].push_back(i);
  for (const auto& [label, rows] : clusters)
    if (!is_eps_pure(rows, truth, epsilon)) return false;
  return true;
}

double misclustering_rate(const Labeling& z, const Labeling& truth) {
  z.validate();
  truth.validate();
  if (z.size() != truth.size()) throw ValidationError("labeling lengths differ");
  std::unordered_map<std::uint32_t, std::vector<std::size_t>> clusters;
  for (std::size_t i = 0; i < z.size(); ++i) clusters[z.z[i]].push_back(i);
  double worst = 0.0;
  for (const auto& [label, rows] : clusters) {
    const double frac = static_cast<double>(majority_count(rows, truth)) /
                        static_cast<double>(rows.size());
    worst = std::max(worst, 1.0 - frac);
  }
  return worst;
}

SeparabilityReport separability(const std::vector<std::vector<double>>& p, double delta) {
  if (p.empty() || p.front().empty()) throw ValidationError("empty frequency matrix");
  const std::size_t l = p.front().size();
  for (const auto& row : p) {
    if (row.size() != l) throw ValidationError("ragged frequency matrix");
    for (double v : row)
      if (!(v >= 0.0 && v <= 1.0)) throw ValidationError("frequency entry outside [0,1]");
  }

  SeparabilityReport rep;
  rep.delta = delta;
  if (p.size() == 1) {
    rep.l_sep = l;
    rep.single_component_convention = true;
    return rep;
  }
  rep.l_sep = l;
  for (std::size_t a = 0; a + 1 < p.size(); ++a) {
    for (std::size_t b = a + 1; b < p.size(); ++b) {
      std::size_t count = 0;
      // inclusive at the boundary, with slack so differences like 0.95 - 0.05
      // still count against delta = 0.9 despite rounding
      for (std::size_t j = 0; j < l; ++j)
        if (std::fabs(p[a][j] - p[b][j]) >= delta - kBoundarySlack) ++count;
      rep.per_pair_counts.push_back({a, b, count});
      rep.l_sep = std::min(rep.l_sep, count);
    }
  }
  return rep;
}

SeparabilityReport separability(const BmmParams& model, double delta) {
  std::vector<std::vector<double>> rows(model.components);
  for (std::size_t k = 0; k < model.components; ++k) {
    rows[k].resize(model.dimension);
    for (std::size_t j = 0; j < model.dimension; ++j) rows[k][j] = model.p(k, j);
  }
  return separability(rows, delta);
}

}  // namespace bmmtc
