#include "bmmtc/theory.hpp"

#include <cmath>

#include "bmmtc/common.hpp"
#include "bmmtc/core.hpp"

namespace bmmtc {

namespace {
const double kLn2 = std::log(2.0);
}

double bound_mixture_low_tc(double n, int d, double tau) {
  const double log_bound = (d + 1) * kLn2 - beta_coefficient(tau, d) * n;
  return std::exp(log_bound);
}

double bound_pure_high_tc(double n, int d, double tau) {
  const double log_bound = (d + 1) * kLn2 - beta_coefficient(tau, d) * d * d * n;
  return std::exp(log_bound);
}

double bound_mtc_mixture(double n, double l_sep, int d, double tau) {
  const double dd = static_cast<double>(d);
  const double denom = dd * dd * dd * dd * dd * std::ldexp(1.0, d + 1);
  const double log_bound = l_sep * std::log(4.0) - tau * tau * n * l_sep / denom;
  return std::exp(log_bound);
}

double bound_mtc_pure(double n, double big_l, int d, double tau) {
  const double dd = static_cast<double>(d);
  const double denom = dd * dd * std::ldexp(1.0, d + 1);
  const double log_bound =
      log_binomial(big_l, dd) + (d + 1) * kLn2 - tau * tau * n / denom;
  return std::exp(log_bound);
}

double min_cluster_bound(int k, double alpha, double n) {
  return k * std::exp(-n * alpha * alpha / 2.0);
}

std::int64_t min_n_for_cluster_sizes(double alpha, int k, double zeta) {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw ValidationError("alpha must lie in (0,1]");
  if (k < 1) throw ValidationError("k must be positive");
  if (!(zeta > 0.0)) throw ValidationError("zeta must be positive");
  return ceil_tol(2.0 / (alpha * alpha) * std::log(3.0 * k / zeta));
}

Theorem1Thresholds theorem1_thresholds(double alpha, double delta, double epsilon, double zeta,
                                       double big_l, double b_const, double c_const) {
  const double lg = std::log(1.0 / epsilon);
  const double ad = alpha * delta;
  const double exponent = 2.0 + (1.0 - alpha) / (2.0 * ad * ad);
  const double shape = lg * lg * lg / std::pow(epsilon, exponent);
  Theorem1Thresholds t;
  t.l_sep_min = b_const * shape;
  t.n_min = c_const * shape * std::log(big_l / zeta);
  return t;
}

double log_binomial(double n, double k) {
  if (k < 0 || k > n) return -std::numeric_limits<double>::infinity();
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

}  // namespace bmmtc
