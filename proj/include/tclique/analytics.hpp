#pragma once

#include <cstdint>

// Closed-form quantities for random simple temporal graphs on K_n with
// i.i.d. uniform [0,1] labels. Logarithms are natural throughout; k0 is a
// ratio of logarithms so the base cancels.
namespace tclique::analytics {

// Parameter bundle for the `analyze` front end. Not every field is used by
// every quantity.
struct AnalyticQuery {
  std::int64_t n = 1;
  std::int64_t k = 1;
  double delta = 0.5;
  std::int64_t h = 0;
  std::int64_t m = 1;
  std::int64_t t = 0;
  double epsilon = 0.1;
  double x = 0.0;
  double y = 0.0;
};

// Joint density of (min, max) of m i.i.d. uniform labels:
// m(m-1)(y-x)^(m-2) on 0 <= x <= y <= 1, else 0. Requires m >= 2.
double minmax_joint_density(std::int64_t m, double x, double y);

// Density of the minimum of m i.i.d. uniform labels: m(1-x)^(m-1) on [0,1].
// Requires m >= 1.
double min_density(std::int64_t m, double x);

// Probability that h i.i.d. uniform labels all fit in a window of width
// delta: h delta^(h-1) (1-delta) + delta^h, and 1 for h <= 1.
double window_probability(std::int64_t h, double delta);

// log of window_probability; -inf when the probability is 0.
double log_window_probability(std::int64_t h, double delta);

// log C(n, k) via lgamma.
double log_binomial(std::int64_t n, std::int64_t k);

// Expected number of delta-temporal cliques of size k in the random simple
// temporal graph on K_n: C(n,k) * window_probability(C(k,2), delta).
// Evaluated in log space.
double expected_clique_count(std::int64_t n, std::int64_t k, double delta);
double log_expected_clique_count(std::int64_t n, std::int64_t k, double delta);

// 2 ln n / ln(1/delta). Requires n >= 2 and 0 < delta < 1.
double k0_threshold(std::int64_t n, double delta);

// Second-moment overlap bound
//   sum_{t=1}^{k-1} C(k,t) C(n-k,k-t) / (C(n,k) delta^C(t,2) (1-delta)).
// Requires 2 <= k <= n/2 and 0 < delta < 1. Log-sum-exp evaluation.
double second_moment_overlap_bound(std::int64_t n, std::int64_t k, double delta);

}  // namespace tclique::analytics
