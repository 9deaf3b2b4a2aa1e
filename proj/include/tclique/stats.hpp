#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace tclique {

struct Summary {
  std::size_t count = 0;
  double mean = 0.0;
  double variance = 0.0;  // sample variance (n - 1 denominator); 0 for a single value
  double std_error = 0.0;
};

Summary summarize(std::span<const double> values);

// Median of a copy of values; averages the middle pair for even sizes.
double median(std::vector<double> values);

// Kolmogorov-Smirnov distance between the empirical CDF of values and the
// uniform CDF on [0,1].
double ks_uniform_statistic(std::vector<double> values);

// Asymptotic critical value c(alpha)/sqrt(n) for the one-sample KS test.
double ks_critical_value(std::size_t n, double alpha = 0.01);

}  // namespace tclique
