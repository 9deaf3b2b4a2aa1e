#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "oracles.hpp"
#include "tclique/analytics.hpp"

namespace tclique::analytics {
namespace {

using boost::math::quadrature::gauss_kronrod;

double integrate(const std::function<double(double)>& f, double a, double b) {
  return gauss_kronrod<double, 31>::integrate(f, a, b, 15, 1e-12);
}

TEST(DensityTest, Examples) {
  EXPECT_DOUBLE_EQ(minmax_joint_density(2, 0.2, 0.7), 2.0);
  EXPECT_EQ(minmax_joint_density(3, 0.5, 0.5), 0.0);
  EXPECT_EQ(minmax_joint_density(4, 0.7, 0.2), 0.0);
  EXPECT_EQ(minmax_joint_density(4, -0.1, 0.2), 0.0);
  EXPECT_THROW(minmax_joint_density(1, 0.1, 0.2), std::invalid_argument);

  EXPECT_DOUBLE_EQ(min_density(1, 0.3), 1.0);
  EXPECT_DOUBLE_EQ(min_density(2, 0.0), 2.0);
  EXPECT_EQ(min_density(5, 1.0), 0.0);
  EXPECT_EQ(min_density(5, 1.5), 0.0);
  EXPECT_THROW(min_density(0, 0.3), std::invalid_argument);
}

TEST(DensityTest, JointDensityIntegratesToOne) {
  for (std::int64_t m = 2; m <= 10; ++m) {
    const double total = integrate(
        [m](double x) { return integrate([m, x](double y) { return minmax_joint_density(m, x, y); }, x, 1.0); },
        0.0, 1.0);
    EXPECT_NEAR(total, 1.0, 1e-8) << "m = " << m;
  }
}

TEST(DensityTest, MinDensityIntegratesToOne) {
  for (std::int64_t m = 1; m <= 20; ++m) {
    EXPECT_NEAR(integrate([m](double x) { return min_density(m, x); }, 0.0, 1.0), 1.0, 1e-8) << "m = " << m;
  }
}

TEST(WindowProbabilityTest, Examples) {
  EXPECT_DOUBLE_EQ(window_probability(1, 0.4), 1.0);
  EXPECT_DOUBLE_EQ(window_probability(0, 0.4), 1.0);
  EXPECT_DOUBLE_EQ(window_probability(2, 0.5), 0.75);
  EXPECT_DOUBLE_EQ(window_probability(3, 0.5), 0.5);
  EXPECT_EQ(window_probability(6, 0.0), 0.0);
  EXPECT_NEAR(window_probability(10, 0.1), 9.1e-9, 1e-20);
  EXPECT_THROW(window_probability(-1, 0.5), std::invalid_argument);
  EXPECT_THROW(window_probability(2, 1.5), std::invalid_argument);
}

// P(|U1 - U2| <= 1/2) = 1 - (1/2)^2, and max - min of three uniforms by
// simulation with an independent generator.
TEST(WindowProbabilityTest, IndependentOracles) {
  EXPECT_DOUBLE_EQ(window_probability(2, 0.5), 1.0 - 0.25);

  std::mt19937_64 rng(31337);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  constexpr int kTrials = 1'000'000;
  int hits = 0;
  for (int i = 0; i < kTrials; ++i) {
    const double a = unit(rng), b = unit(rng), c = unit(rng);
    if (std::max({a, b, c}) - std::min({a, b, c}) <= 0.5) ++hits;
  }
  const double sigma = std::sqrt(0.25 / kTrials);
  EXPECT_NEAR(static_cast<double>(hits) / kTrials, window_probability(3, 0.5), 3 * sigma);
}

TEST(WindowProbabilityTest, MonotoneAndBounded) {
  for (std::int64_t h = 0; h <= 60; ++h) {
    double previous = -1.0;
    for (int i = 0; i <= 100; ++i) {
      const double delta = i / 100.0;
      const double p = window_probability(h, delta);
      EXPECT_GE(p, previous) << "h = " << h << " delta = " << delta;
      EXPECT_LE(p, window_probability(std::max<std::int64_t>(h - 1, 0), delta));
      EXPECT_GE(p, std::pow(delta, static_cast<double>(h)));
      EXPECT_GE(p, 0.0);
      EXPECT_LE(p, 1.0);
      if (h >= 2) {
        const auto hd = static_cast<double>(h);
        EXPECT_EQ(p, hd * std::pow(delta, hd - 1) * (1 - delta) + std::pow(delta, hd));
      }
      previous = p;
    }
  }
}

TEST(WindowProbabilityTest, LogMatchesLinear) {
  for (const std::int64_t h : {2, 5, 45}) {
    for (const double delta : {0.05, 0.3, 0.9}) {
      EXPECT_NEAR(std::exp(log_window_probability(h, delta)) / window_probability(h, delta), 1.0, 1e-12);
    }
  }
  EXPECT_EQ(log_window_probability(3, 0.0), -std::numeric_limits<double>::infinity());
}

TEST(ExpectedCountTest, Examples) {
  EXPECT_NEAR(expected_clique_count(4, 3, 0.5), 2.0, 1e-12);
  for (const std::int64_t n : {2, 10, 1000}) {
    for (const double delta : {0.0, 0.3, 1.0}) {
      const double pairs = static_cast<double>(n) * static_cast<double>(n - 1) / 2.0;
      EXPECT_NEAR(expected_clique_count(n, 2, delta) / pairs, 1.0, 1e-12);
    }
  }
  EXPECT_THROW(expected_clique_count(3, 4, 0.5), std::invalid_argument);
  EXPECT_THROW(expected_clique_count(3, 0, 0.5), std::invalid_argument);
}

TEST(ExpectedCountTest, MatchesRationalOracle) {
  const double exact = oracle::to_double(oracle::expected_clique_count(30, 10, oracle::Rational(1, 2)));
  EXPECT_NEAR(expected_clique_count(30, 10, 0.5) / exact, 1.0, 1e-10);

  std::mt19937_64 rng(8);
  for (int rep = 0; rep < 50; ++rep) {
    const auto n = static_cast<std::int64_t>(2 + rng() % 99);
    const auto k = static_cast<std::int64_t>(1 + rng() % std::min<std::int64_t>(10, n));
    const auto millis = static_cast<std::int64_t>(1 + rng() % 999);
    const double value = expected_clique_count(n, k, static_cast<double>(millis) / 1000.0);
    const double reference = oracle::to_double(oracle::expected_clique_count(n, k, oracle::Rational(millis, 1000)));
    EXPECT_NEAR(value / reference, 1.0, 1e-10) << n << " " << k << " " << millis;
  }
}

TEST(ExpectedCountTest, CompositionalIdentity) {
  for (const std::int64_t n : {5, 40, 300}) {
    for (std::int64_t k = 1; k <= 5; ++k) {
      for (const double delta : {0.1, 0.5, 0.8}) {
        const double binom = oracle::to_double(oracle::Rational(oracle::binomial(n, k)));
        const double composed = binom * window_probability(k * (k - 1) / 2, delta);
        EXPECT_NEAR(expected_clique_count(n, k, delta) / composed, 1.0, 1e-12);
      }
    }
  }
}

// First-moment trend: above the threshold the expectation vanishes as n
// grows, below it the expectation grows.
TEST(ExpectedCountTest, FirstMomentTrends) {
  double previous_upper = std::numeric_limits<double>::infinity();
  double previous_lower = -std::numeric_limits<double>::infinity();
  for (const std::int64_t n : {1'000, 10'000, 100'000, 1'000'000}) {
    const double k0 = k0_threshold(n, 0.5);
    const auto upper = static_cast<std::int64_t>(std::ceil(1.2 * k0));
    const auto lower = static_cast<std::int64_t>(std::floor(0.8 * k0));
    const double log_upper = log_expected_clique_count(n, upper, 0.5);
    const double log_lower = log_expected_clique_count(n, lower, 0.5);
    EXPECT_LT(log_upper, previous_upper);
    EXPECT_GT(log_lower, previous_lower);
    EXPECT_LT(log_upper, 0.0);
    EXPECT_GT(log_lower, 0.0);
    previous_upper = log_upper;
    previous_lower = log_lower;
  }
}

TEST(K0Test, Examples) {
  EXPECT_NEAR(k0_threshold(1000, 0.5), 19.9316, 5e-5);
  EXPECT_NEAR(k0_threshold(300, 0.3), 9.474936, 5e-6);
  for (const std::int64_t n : {3, 50, 1000}) {
    EXPECT_NEAR(k0_threshold(n, 1.0 / static_cast<double>(n * n)), 1.0, 1e-12);
  }
  EXPECT_THROW(k0_threshold(10, 0.0), std::invalid_argument);
  EXPECT_THROW(k0_threshold(10, 1.0), std::invalid_argument);
  EXPECT_THROW(k0_threshold(1, 0.5), std::invalid_argument);
}

TEST(K0Test, IncreasingInNAndDelta) {
  for (int i = 1; i < 99; ++i) {
    const double d = i / 100.0;
    for (std::int64_t n = 2; n < 2000; n = n * 3 / 2 + 1) {
      EXPECT_LT(k0_threshold(n, d), k0_threshold(n * 3 / 2 + 1, d));
      EXPECT_LT(k0_threshold(n, d), k0_threshold(n, d + 0.01));
    }
  }
}

TEST(OverlapBoundTest, SingleTermForPairs) {
  for (const std::int64_t n : {4, 10, 200}) {
    for (const double delta : {0.2, 0.7}) {
      const double nd = static_cast<double>(n);
      const double expected = 2.0 * (nd - 2.0) / (nd * (nd - 1.0) / 2.0 * (1.0 - delta));
      EXPECT_NEAR(second_moment_overlap_bound(n, 2, delta) / expected, 1.0, 1e-12);
    }
  }
}

TEST(OverlapBoundTest, MatchesRationalOracle) {
  const double exact = oracle::to_double(oracle::overlap_bound(100, 5, oracle::Rational(3, 10)));
  EXPECT_NEAR(second_moment_overlap_bound(100, 5, 0.3) / exact, 1.0, 1e-10);
}

TEST(OverlapBoundTest, SmallBelowThresholdForLargeN) {
  const std::int64_t n = 1'000'000;
  const auto k = static_cast<std::int64_t>(std::floor(0.8 * k0_threshold(n, 0.5)));
  EXPECT_LT(second_moment_overlap_bound(n, k, 0.5), 1.0);
}

TEST(OverlapBoundTest, RejectsOutOfRange) {
  EXPECT_THROW(second_moment_overlap_bound(10, 1, 0.5), std::invalid_argument);
  EXPECT_THROW(second_moment_overlap_bound(10, 6, 0.5), std::invalid_argument);
  EXPECT_THROW(second_moment_overlap_bound(10, 3, 1.0), std::invalid_argument);
}

}  // namespace
}  // namespace tclique::analytics
