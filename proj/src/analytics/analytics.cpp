#include "tclique/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace tclique::analytics {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

void require_delta(double delta, const char* where) {
  if (!(delta >= 0.0 && delta <= 1.0)) {
    throw std::invalid_argument(std::string(where) + ": delta must lie in [0,1]");
  }
}

std::int64_t pairs(std::int64_t k) { return k * (k - 1) / 2; }

double log_sum_exp(const std::vector<double>& terms) {
  const double peak = *std::max_element(terms.begin(), terms.end());
  if (peak == kNegInf) return kNegInf;
  double acc = 0.0;
  for (const double t : terms) acc += std::exp(t - peak);
  return peak + std::log(acc);
}

}  // namespace

double minmax_joint_density(std::int64_t m, double x, double y) {
  if (m < 2) throw std::invalid_argument("minmax_joint_density: m must be at least 2");
  if (!(0.0 <= x && x <= y && y <= 1.0)) return 0.0;
  const auto md = static_cast<double>(m);
  return md * (md - 1.0) * std::pow(y - x, md - 2.0);
}

double min_density(std::int64_t m, double x) {
  if (m < 1) throw std::invalid_argument("min_density: m must be at least 1");
  if (!(0.0 <= x && x <= 1.0)) return 0.0;
  const auto md = static_cast<double>(m);
  return md * std::pow(1.0 - x, md - 1.0);
}

double window_probability(std::int64_t h, double delta) {
  if (h < 0) throw std::invalid_argument("window_probability: h must be non-negative");
  require_delta(delta, "window_probability");
  if (h <= 1) return 1.0;
  const auto hd = static_cast<double>(h);
  return hd * std::pow(delta, hd - 1.0) * (1.0 - delta) + std::pow(delta, hd);
}

double log_window_probability(std::int64_t h, double delta) {
  if (h < 0) throw std::invalid_argument("log_window_probability: h must be non-negative");
  require_delta(delta, "log_window_probability");
  if (h <= 1) return 0.0;
  if (delta == 0.0) return kNegInf;
  const auto hd = static_cast<double>(h);
  // h delta^(h-1)(1-delta) + delta^h = delta^(h-1) (h - (h-1) delta)
  return (hd - 1.0) * std::log(delta) + std::log(hd - (hd - 1.0) * delta);
}

double log_binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return kNegInf;
  const std::int64_t j = std::min(k, n - k);
  if (j <= 64) {
    // Direct product; far more accurate than lgamma differences for large n.
    long double value = 1.0L;
    for (std::int64_t i = 1; i <= j; ++i) value = value * static_cast<long double>(n - j + i) / i;
    return static_cast<double>(std::log(value));
  }
  const auto nd = static_cast<double>(n);
  const auto kd = static_cast<double>(k);
  return std::lgamma(nd + 1.0) - std::lgamma(kd + 1.0) - std::lgamma(nd - kd + 1.0);
}

double log_expected_clique_count(std::int64_t n, std::int64_t k, double delta) {
  if (k < 1 || n < 1) throw std::invalid_argument("expected_clique_count: need 1 <= k <= n");
  if (k > n) throw std::invalid_argument("expected_clique_count: k exceeds n");
  require_delta(delta, "expected_clique_count");
  return log_binomial(n, k) + log_window_probability(pairs(k), delta);
}

double expected_clique_count(std::int64_t n, std::int64_t k, double delta) {
  return std::exp(log_expected_clique_count(n, k, delta));
}

double k0_threshold(std::int64_t n, double delta) {
  if (n < 2) throw std::invalid_argument("k0_threshold: n must be at least 2");
  if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("k0_threshold: delta must lie in (0,1)");
  return 2.0 * std::log(static_cast<double>(n)) / std::log(1.0 / delta);
}

double second_moment_overlap_bound(std::int64_t n, std::int64_t k, double delta) {
  if (k < 2 || 2 * k > n) throw std::invalid_argument("second_moment_overlap_bound: need 2 <= k <= n/2");
  if (!(delta > 0.0 && delta < 1.0)) {
    throw std::invalid_argument("second_moment_overlap_bound: delta must lie in (0,1)");
  }
  const double log_total = log_binomial(n, k);
  const double log_delta = std::log(delta);
  const double log_gap = std::log1p(-delta);
  std::vector<double> terms;
  terms.reserve(static_cast<std::size_t>(k - 1));
  for (std::int64_t t = 1; t < k; ++t) {
    terms.push_back(log_binomial(k, t) + log_binomial(n - k, k - t) - log_total -
                    static_cast<double>(pairs(t)) * log_delta - log_gap);
  }
  return std::exp(log_sum_exp(terms));
}

}  // namespace tclique::analytics
