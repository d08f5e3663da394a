#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "bmmtc/core.hpp"
#include "bmmtc/theory.hpp"

using namespace bmmtc;

TEST_CASE("mixture low-tc bound") {
  CHECK(bound_mixture_low_tc(0, 3, 0.33) == doctest::Approx(16.0).epsilon(1e-12));
  const double tau = pureness_threshold(0.2, 2.0);
  // direct (non log-space) evaluation as the reference
  const double beta = tau * tau / (81.0 * 16.0);
  const double direct = 16.0 * std::exp(-beta * 1e6);
  CHECK(bound_mixture_low_tc(1e6, 3, tau) == doctest::Approx(direct).epsilon(1e-10));
  CHECK(bound_mixture_low_tc(1e6, 3, tau) == doctest::Approx(4.59e-36).epsilon(0.01));
}

TEST_CASE("pure high-tc bound") {
  CHECK(bound_pure_high_tc(0, 2, 0.5) == doctest::Approx(8.0).epsilon(1e-12));
  const double tau = pureness_threshold(0.2, 2.0);
  const double beta = tau * tau / (81.0 * 16.0);
  const double direct = 16.0 * std::exp(-beta * 9.0 * 1e4);
  CHECK(bound_pure_high_tc(1e4, 3, tau) == doctest::Approx(direct).epsilon(1e-10));
  CHECK(bound_pure_high_tc(1e4, 3, tau) == doctest::Approx(8.21e-3).epsilon(0.01));
}

TEST_CASE("pure-over-mixture ratio identity") {
  const double tau = 0.29;
  for (double n : {10.0, 100.0, 5000.0}) {
    for (int d : {2, 3, 5}) {
      const double ratio = bound_pure_high_tc(n, d, tau) / bound_mixture_low_tc(n, d, tau);
      const double expected = std::exp(-beta_coefficient(tau, d) * (d * d - 1.0) * n);
      CHECK(ratio == doctest::Approx(expected).epsilon(1e-10));
    }
  }
}

TEST_CASE("mtc bounds") {
  CHECK(bound_mtc_mixture(0, 2, 3, 0.33) == doctest::Approx(16.0).epsilon(1e-12));

  // with L = d there is a single subset and the pure bound loses the binomial factor
  const double tau = 0.31;
  CHECK(bound_mtc_pure(500, 4, 4, tau) ==
        doctest::Approx(32.0 * std::exp(-tau * tau * 500 / (16.0 * 32.0))).epsilon(1e-10));

  const double t2 = pureness_threshold(0.2, 2.0);
  const double direct = 28.0 * 8.0 * std::exp(-t2 * t2 * 1e4 / 32.0);
  CHECK(bound_mtc_pure(1e4, 8, 2, t2) == doctest::Approx(direct).epsilon(1e-10));
  CHECK(bound_mtc_pure(1e4, 8, 2, t2) == doctest::Approx(3.5e-13).epsilon(0.02));

  // log-space evaluation survives ranges where the direct product overflows
  const double huge = bound_mtc_mixture(0, 1000, 3, 0.33);
  CHECK(std::isinf(huge));
  CHECK(bound_mtc_mixture(1e12, 1000, 3, 0.33) == 0.0);
}

TEST_CASE("bounds decrease strictly in n") {
  const double tau = 0.33;
  for (int d : {2, 4}) {
    double prev_mix = bound_mixture_low_tc(0, d, tau);
    double prev_pure = bound_pure_high_tc(0, d, tau);
    double prev_m3 = bound_mtc_mixture(0, 6, d, tau);
    double prev_p3 = bound_mtc_pure(0, 8, d, tau);
    for (double n : {10.0, 100.0, 1000.0, 10000.0}) {
      CHECK(bound_mixture_low_tc(n, d, tau) < prev_mix);
      CHECK(bound_pure_high_tc(n, d, tau) < prev_pure);
      CHECK(bound_mtc_mixture(n, 6, d, tau) < prev_m3);
      CHECK(bound_mtc_pure(n, 8, d, tau) < prev_p3);
      prev_mix = bound_mixture_low_tc(n, d, tau);
      prev_pure = bound_pure_high_tc(n, d, tau);
      prev_m3 = bound_mtc_mixture(n, 6, d, tau);
      prev_p3 = bound_mtc_pure(n, 8, d, tau);
    }
  }
}

TEST_CASE("min n for cluster sizes") {
  CHECK(min_n_for_cluster_sizes(0.5, 2, 0.1) == 33);
  CHECK(min_n_for_cluster_sizes(1.0, 1, 3.0) == 0);
  // non-increasing in zeta and alpha
  std::int64_t prev = min_n_for_cluster_sizes(0.5, 2, 0.01);
  for (double zeta : {0.05, 0.1, 0.5, 1.0}) {
    const auto cur = min_n_for_cluster_sizes(0.5, 2, zeta);
    CHECK(cur <= prev);
    prev = cur;
  }
  prev = min_n_for_cluster_sizes(0.1, 2, 0.1);
  for (double alpha : {0.2, 0.4, 0.8, 1.0}) {
    const auto cur = min_n_for_cluster_sizes(alpha, 2, 0.1);
    CHECK(cur <= prev);
    prev = cur;
  }
  CHECK_THROWS_AS(min_n_for_cluster_sizes(0.0, 2, 0.1), ValidationError);
  CHECK_THROWS_AS(min_n_for_cluster_sizes(0.5, 0, 0.1), ValidationError);
  CHECK_THROWS_AS(min_n_for_cluster_sizes(0.5, 2, 0.0), ValidationError);
}

TEST_CASE("min cluster bound formula") {
  CHECK(min_cluster_bound(2, 0.5, 33) == doctest::Approx(2.0 * std::exp(-33.0 / 8.0)).epsilon(1e-12));
  CHECK(min_cluster_bound(2, 0.5, 33) == doctest::Approx(0.0323).epsilon(0.01));
}

TEST_CASE("theorem thresholds") {
  // identical shapes: the ratio collapses to log(L/zeta)
  const auto t = theorem1_thresholds(0.5, 0.5, 0.2, 0.05, 64.0, 2.5, 2.5);
  CHECK(t.n_min / t.l_sep_min == doctest::Approx(std::log(64.0 / 0.05)).epsilon(1e-12));

  const auto zero = theorem1_thresholds(0.5, 0.5, 0.2, 0.05, 64.0, 0.0, 1.0);
  CHECK(zero.l_sep_min == 0.0);

  // exponent 2 + (1-alpha)/(2 (alpha delta)^2) = 6 at alpha = delta = 0.5
  const auto unit = theorem1_thresholds(0.5, 0.5, 0.2, 0.1, 100.0, 1.0, 1.0);
  const double lg = std::log(5.0);
  CHECK(unit.l_sep_min == doctest::Approx(lg * lg * lg / std::pow(0.2, 6.0)).epsilon(1e-12));
  CHECK(unit.l_sep_min == doctest::Approx(65139.7).epsilon(1e-4));
}

TEST_CASE("log binomial") {
  CHECK(log_binomial(8, 2) == doctest::Approx(std::log(28.0)).epsilon(1e-12));
  CHECK(log_binomial(4, 4) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(std::isinf(log_binomial(3, 5)));
}
