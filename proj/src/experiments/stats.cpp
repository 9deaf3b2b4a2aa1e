#include "tclique/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tclique {

Summary summarize(std::span<const double> values) {
  Summary s;
  s.count = values.size();
  if (values.empty()) return s;
  double sum = 0.0;
  for (const double v : values) sum += v;
  s.mean = sum / static_cast<double>(s.count);
  if (s.count > 1) {
    double ss = 0.0;
    for (const double v : values) ss += (v - s.mean) * (v - s.mean);
    s.variance = ss / static_cast<double>(s.count - 1);
  }
  s.std_error = std::sqrt(s.variance / static_cast<double>(s.count));
  return s;
}

double median(std::vector<double> values) {
  if (values.empty()) throw std::invalid_argument("median of empty sample");
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  if (values.size() % 2 == 1) return values[mid];
  return 0.5 * (values[mid - 1] + values[mid]);
}

double ks_uniform_statistic(std::vector<double> values) {
  if (values.empty()) return 0.0;
  std::sort(values.begin(), values.end());
  const auto n = static_cast<double>(values.size());
  double d = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double x = std::clamp(values[i], 0.0, 1.0);
    d = std::max({d, (static_cast<double>(i) + 1.0) / n - x, x - static_cast<double>(i) / n});
  }
  return d;
}

double ks_critical_value(std::size_t n, double alpha) {
  if (n == 0) throw std::invalid_argument("ks_critical_value: empty sample");
  // c(alpha) = sqrt(-ln(alpha / 2) / 2)
  return std::sqrt(-0.5 * std::log(alpha / 2.0)) / std::sqrt(static_cast<double>(n));
}

}  // namespace tclique
