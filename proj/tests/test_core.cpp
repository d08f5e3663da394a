#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstring>

#include "bmmtc/core.hpp"

using namespace bmmtc;

namespace {
const double kLn2 = std::log(2.0);

bool bit_equal(double a, double b) { return std::memcmp(&a, &b, sizeof(double)) == 0; }
}  // namespace

TEST_CASE("entropy_bernoulli values") {
  CHECK(entropy_bernoulli(0.0) == 0.0);
  CHECK(entropy_bernoulli(1.0) == 0.0);
  CHECK(entropy_bernoulli(0.5) == doctest::Approx(kLn2).epsilon(1e-15));
  // direct formula evaluation at p = 0.1
  const double expected = -0.1 * std::log(0.1) - 0.9 * std::log(0.9);
  CHECK(entropy_bernoulli(0.1) == doctest::Approx(expected).epsilon(1e-15));
  CHECK(entropy_bernoulli(0.1) == doctest::Approx(0.325083).epsilon(1e-5));
  CHECK_THROWS_AS(entropy_bernoulli(-0.01), std::domain_error);
  CHECK_THROWS_AS(entropy_bernoulli(1.01), std::domain_error);
}

TEST_CASE("entropy_bernoulli symmetry") {
  for (int i = 0; i <= 100; ++i) {
    const double p = i / 100.0;
    CHECK(std::fabs(entropy_bernoulli(p) - entropy_bernoulli(1.0 - p)) <= 1e-15);
  }
}

TEST_CASE("entropy_discrete values") {
  const std::vector<double> point{1.0};
  CHECK(entropy_discrete(point) == 0.0);
  const std::vector<double> uniform2{0.5, 0.5};
  CHECK(entropy_discrete(uniform2) == doctest::Approx(kLn2).epsilon(1e-15));
  const std::vector<double> skew{0.9, 0.1};
  CHECK(entropy_discrete(skew) == doctest::Approx(0.325083).epsilon(1e-5));
  CHECK(entropy_discrete(skew) <= std::log(2.0));

  const std::vector<double> with_zero{0.5, 0.0, 0.5};
  CHECK(entropy_discrete(with_zero) == doctest::Approx(kLn2).epsilon(1e-15));

  const std::vector<double> negative{1.2, -0.2};
  CHECK_THROWS_AS(entropy_discrete(negative), std::domain_error);
  const std::vector<double> bad_sum{0.5, 0.4};
  CHECK_THROWS_AS(entropy_discrete(bad_sum), std::domain_error);
}

TEST_CASE("kl_bernoulli values and conventions") {
  CHECK(kl_bernoulli(0.5, 0.5) == 0.0);
  CHECK(kl_bernoulli(1.0, 0.5) == doctest::Approx(kLn2).epsilon(1e-15));
  CHECK(std::isinf(kl_bernoulli(1.5, 0.5)));
  CHECK(std::isinf(kl_bernoulli(-0.1, 0.5)));
  CHECK(std::isinf(kl_bernoulli(0.3, 0.0)));
  CHECK(std::isinf(kl_bernoulli(0.3, 1.0)));
  CHECK(kl_bernoulli(0.0, 0.0) == 0.0);
  CHECK(kl_bernoulli(1.0, 1.0) == 0.0);
  CHECK_THROWS_AS(kl_bernoulli(0.5, -0.1), std::domain_error);
  CHECK_THROWS_AS(kl_bernoulli(0.5, 1.1), std::domain_error);
}

TEST_CASE("kl_bernoulli nonnegative with equality iff equal") {
  for (int i = 0; i <= 20; ++i) {
    for (int j = 0; j <= 20; ++j) {
      const double x = i / 20.0;
      const double y = j / 20.0;
      const double v = kl_bernoulli(x, y);
      CHECK(v >= 0.0);
      if (i == j) CHECK(v == 0.0);
      if (i != j) CHECK(v > 0.0);
    }
  }
}

TEST_CASE("derive_algo_params worked example") {
  const auto p = derive_algo_params(0.5, 0.5, 0.2, 20);
  CHECK(p.d == 17);
  CHECK(p.tau == doctest::Approx(0.330259).epsilon(1e-5));
  CHECK(p.tau == doctest::Approx(0.1 * (1.0 + std::log(10.0))).epsilon(1e-15));
  CHECK(p.beta == doctest::Approx(p.tau * p.tau / (17.0 * 17 * 17 * 17 * std::ldexp(1.0, 18)))
                      .epsilon(1e-15));
}

TEST_CASE("derive_algo_params infeasible dimension") {
  CHECK_THROWS_AS(derive_algo_params(0.5, 0.4, 0.1, 40), InfeasibleDimensionError);
  // the same inputs pass once the cap admits the derived d = 28
  const auto p = derive_algo_params(0.5, 0.4, 0.1, 40, std::nullopt, 30);
  CHECK(p.d == 28);
  // d may not exceed the informative-dimension count either
  CHECK_THROWS_AS(derive_algo_params(0.5, 0.5, 0.2, 16), InfeasibleDimensionError);
}

TEST_CASE("derive_algo_params override") {
  const auto p = derive_algo_params(0.5, 0.5, 0.2, 20, 3);
  CHECK(p.d == 3);
  CHECK(p.tau == doctest::Approx(0.330259).epsilon(1e-5));
  CHECK(p.beta == doctest::Approx(8.417e-5).epsilon(1e-3));
  CHECK(p.beta == doctest::Approx(p.tau * p.tau / (81.0 * 16.0)).epsilon(1e-15));
}

TEST_CASE("derive_algo_params rejects bad inputs") {
  CHECK_THROWS_AS(derive_algo_params(0.0, 0.5, 0.2, 20), ValidationError);
  CHECK_THROWS_AS(derive_algo_params(0.5, 1.5, 0.2, 20), ValidationError);
  CHECK_THROWS_AS(derive_algo_params(0.5, 0.5, 1.0, 20), ValidationError);
  CHECK_THROWS_AS(derive_algo_params(0.5, 0.5, 0.2, 0), ValidationError);
  CHECK_THROWS_AS(derive_algo_params(0.5, 0.5, 0.2, 20, 0), ValidationError);
}

TEST_CASE("derived d monotone in alpha and delta; in epsilon below the turning point") {
  auto derived_d = [](double a, double dl, double e) {
    return derive_algo_params(a, dl, e, 1 << 20, std::nullopt, 1 << 20).d;
  };
  for (double dl : {0.3, 0.5, 0.8}) {
    int prev = derived_d(0.1, dl, 0.1);
    for (double a : {0.2, 0.3, 0.5, 0.7, 0.9}) {
      const int cur = derived_d(a, dl, 0.1);
      CHECK(cur <= prev);
      prev = cur;
    }
  }
  for (double a : {0.2, 0.5}) {
    int prev = derived_d(a, 0.1, 0.1);
    for (double dl : {0.2, 0.4, 0.6, 0.8, 1.0}) {
      const int cur = derived_d(a, dl, 0.1);
      CHECK(cur <= prev);
      prev = cur;
    }
  }
  // the raw formula is decreasing in epsilon only up to (1+ln(1/(alpha eps)))
  // = (1-eps)/eps; stay below that point
  for (double a : {0.3, 0.5}) {
    int prev = derived_d(a, 0.5, 0.02);
    for (double e : {0.05, 0.1, 0.15, 0.2}) {
      const int cur = derived_d(a, 0.5, e);
      CHECK(cur <= prev);
      prev = cur;
    }
  }
}

TEST_CASE("algo params json round-trips bit-exactly") {
  const auto p = derive_algo_params(0.31, 0.47, 0.13, 256, std::nullopt, 256);
  const auto q = algo_params_from_json(algo_params_to_json(p));
  CHECK(bit_equal(p.alpha, q.alpha));
  CHECK(bit_equal(p.delta, q.delta));
  CHECK(bit_equal(p.epsilon, q.epsilon));
  CHECK(p.l_sep == q.l_sep);
  CHECK(p.d == q.d);
  CHECK(bit_equal(p.tau, q.tau));
  CHECK(bit_equal(p.beta, q.beta));
}

TEST_CASE("vacuous threshold flag") {
  // with d = 2 the largest attainable total correlation is ln 2
  AlgoParams p = derive_algo_params(0.5, 0.5, 0.2, 20, 2);
  CHECK(p.tau < kLn2);
  CHECK_FALSE(p.tau_vacuous());
  p.tau = 0.75;
  CHECK(p.tau_vacuous());
}

TEST_CASE("bmm params validation and digest") {
  const auto m = BmmParams::make({{0.1, 0.2}, {0.9, 0.8}}, {0.5, 0.5});
  CHECK(m.components == 2);
  CHECK(m.dimension == 2);
  CHECK(m.digest().size() == 16);
  CHECK(m.digest() == BmmParams::make({{0.1, 0.2}, {0.9, 0.8}}, {0.5, 0.5}).digest());
  CHECK(m.digest() != BmmParams::make({{0.1, 0.2}, {0.9, 0.8}}, {0.4, 0.6}).digest());

  CHECK_THROWS_AS(BmmParams::make({{0.1, 1.2}}, {1.0}), ValidationError);
  CHECK_THROWS_AS(BmmParams::make({{0.1}, {0.2}}, {0.6, 0.6}), ValidationError);
  CHECK_THROWS_AS(BmmParams::make({{0.1}, {0.2, 0.3}}, {0.5, 0.5}), ValidationError);
  CHECK_THROWS_AS(BmmParams::make({}, {}), ValidationError);
}
