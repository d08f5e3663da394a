#include "bmmtc/core.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "json.hpp"

#include "bmmtc/json_writer.hpp"

namespace bmmtc {

namespace {
constexpr double kWeightSumTol = 1e-12;
constexpr double kInf = std::numeric_limits<double>::infinity();
}  // namespace

BmmParams BmmParams::make(const std::vector<std::vector<double>>& rows,
                          const std::vector<double>& weights) {
  BmmParams m;
  m.components = rows.size();
  m.dimension = rows.empty() ? 0 : rows.front().size();
  m.freq.reserve(m.components * m.dimension);
  for (const auto& r : rows) {
    if (r.size() != m.dimension)
      throw ValidationError("frequency matrix rows have unequal lengths");
    m.freq.insert(m.freq.end(), r.begin(), r.end());
  }
  m.weight = weights;
  m.validate();
  return m;
}

void BmmParams::validate() const {
  if (components < 1) throw ValidationError("model needs at least one component");
  if (dimension < 1) throw ValidationError("model needs at least one column");
  if (freq.size() != components * dimension)
    throw ValidationError("frequency matrix size does not match K x L");
  if (weight.size() != components)
    throw ValidationError("weight vector length does not match K");
  for (double v : freq)
    if (!(v >= 0.0 && v <= 1.0)) throw ValidationError("frequency entry outside [0,1]");
  double sum = 0.0;
  for (double w : weight) {
    if (!(w >= 0.0)) throw ValidationError("negative mixture weight");
    sum += w;
  }
  if (std::fabs(sum - 1.0) > kWeightSumTol)
    throw ValidationError("mixture weights sum to " + format_real(sum) + ", expected 1");
}

std::string BmmParams::digest() const {
  std::string canon = "K=" + std::to_string(components) + ";L=" + std::to_string(dimension) + ";P=";
  for (double v : freq) {
    canon += format_real(v);
    canon += ',';
  }
  canon += ";w=";
  for (double v : weight) {
    canon += format_real(v);
    canon += ',';
  }
  return hex64(fnv1a64(canon));
}

double entropy_bernoulli(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("entropy_bernoulli: p outside [0,1]");
  double h = 0.0;
  if (p > 0.0) h -= p * std::log(p);
  if (p < 1.0) h -= (1.0 - p) * std::log(1.0 - p);
  return h;
}

double entropy_discrete(std::span<const double> w) {
  double sum = 0.0, h = 0.0;
  for (double v : w) {
    if (!(v >= 0.0)) throw std::domain_error("entropy_discrete: negative entry");
    sum += v;
    if (v > 0.0) h -= v * std::log(v);
  }
  if (std::fabs(sum - 1.0) > kWeightSumTol)
    throw std::domain_error("entropy_discrete: entries sum to " + format_real(sum));
  return h;
}

double kl_bernoulli(double x, double y) {
  if (!(y >= 0.0 && y <= 1.0)) throw std::domain_error("kl_bernoulli: y outside [0,1]");
  if (!(x >= 0.0 && x <= 1.0)) return kInf;
  double acc = 0.0;
  if (x > 0.0) {
    if (y == 0.0) return kInf;
    acc += x * std::log(x / y);
  }
  if (x < 1.0) {
    if (y == 1.0) return kInf;
    acc += (1.0 - x) * std::log((1.0 - x) / (1.0 - y));
  }
  return acc;
}

double pureness_threshold(double epsilon, double k) {
  return 0.5 * epsilon * (1.0 + std::log(k / epsilon));
}

double beta_coefficient(double tau, int d) {
  const double dd = static_cast<double>(d);
  return tau * tau / (dd * dd * dd * dd * std::ldexp(1.0, d + 1));
}

bool AlgoParams::tau_vacuous() const {
  return tau >= (d - 1) * std::log(2.0);
}

double sub_dimension_raw(double alpha, double delta, double epsilon) {
  const double ad = alpha * delta;
  return (1.0 - alpha) / (2.0 * ad * ad * (1.0 - epsilon)) *
         (1.0 + std::log(1.0 / (alpha * epsilon)));
}

AlgoParams derive_algo_params(double alpha, double delta, double epsilon, int l_sep,
                              std::optional<int> d_override, int dim_cap) {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw ValidationError("alpha must lie in (0,1]");
  if (!(delta > 0.0 && delta <= 1.0)) throw ValidationError("delta must lie in (0,1]");
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw ValidationError("epsilon must lie in (0,1)");
  if (l_sep < 1) throw ValidationError("l_sep must be a positive integer");

  AlgoParams p;
  p.alpha = alpha;
  p.delta = delta;
  p.epsilon = epsilon;
  p.l_sep = l_sep;
  if (d_override) {
    if (*d_override < 1) throw ValidationError("d override must be positive");
    p.d = *d_override;
  } else {
    const long long d = ceil_tol(sub_dimension_raw(alpha, delta, epsilon));
    p.d = static_cast<int>(std::max(1LL, d));
  }
  if (p.d > dim_cap)
    throw InfeasibleDimensionError("sub-dimension d=" + std::to_string(p.d) +
                                   " exceeds the joint-table cap " + std::to_string(dim_cap));
  if (p.d > l_sep)
    throw InfeasibleDimensionError("sub-dimension d=" + std::to_string(p.d) +
                                   " exceeds the informative-dimension count " +
                                   std::to_string(l_sep));
  p.tau = pureness_threshold(epsilon, 1.0 / alpha);
  p.beta = beta_coefficient(p.tau, p.d);
  return p;
}

std::string algo_params_to_json(const AlgoParams& p) {
  JsonWriter w;
  w.begin_object()
      .kv("alpha", p.alpha)
      .kv("delta", p.delta)
      .kv("epsilon", p.epsilon)
      .kv("l_sep", std::int64_t{p.l_sep})
      .kv("d", std::int64_t{p.d})
      .kv("tau", p.tau)
      .kv("beta", p.beta)
      .end_object();
  return w.str();
}

AlgoParams algo_params_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  AlgoParams p;
  p.alpha = j.at("alpha").get<double>();
  p.delta = j.at("delta").get<double>();
  p.epsilon = j.at("epsilon").get<double>();
  p.l_sep = j.at("l_sep").get<int>();
  p.d = j.at("d").get<int>();
  p.tau = j.at("tau").get<double>();
  p.beta = j.at("beta").get<double>();
  return p;
}

}  // namespace bmmtc
