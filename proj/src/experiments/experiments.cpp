#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

#include "tclique/analytics.hpp"
#include "tclique/experiments.hpp"
#include "tclique/parallel.hpp"
#include "tclique/rng.hpp"

namespace tclique {
namespace {

std::string param(double value) {
  std::ostringstream out;
  out.precision(17);
  out << value;
  return out.str();
}

std::string param(std::size_t value) { return std::to_string(value); }

// Runs `trial(index, seed)` for every index and stores the returned values in
// index order. Seeds depend only on (master seed, index).
template <typename Trial>
void run_trials(ExperimentReport& report, std::size_t count, const ExperimentOptions& opts, Trial&& trial) {
  report.master_seed = opts.seed;
  report.trials.assign(count, {});
  parallel_for(count, opts.threads, [&](std::size_t i) {
    TrialRecord& rec = report.trials[i];
    rec.index = i;
    rec.seed = derive_seed(opts.seed, i);
    rec.values = trial(i, rec.seed);
    if (rec.values.size() != report.columns.size()) throw std::logic_error("trial produced wrong column count");
  });
  report.finalize();
}

void require_delta_open(double delta) {
  if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("delta must lie in (0,1)");
}

void require_solver_feasible(std::size_t n, const SolverConfig& cfg) {
  if (cfg.mode == SolverMode::kExact && n > kExactHarnessMaxVertices) {
    throw InfeasibleConfig("exact mode is limited to n <= " + std::to_string(kExactHarnessMaxVertices) +
                           " in experiments; use heuristic mode");
  }
  if (cfg.mode == SolverMode::kBruteforce && n > kBruteforceMaxVertices && !cfg.allow_large_bruteforce) {
    throw InfeasibleConfig("brute force is limited to n <= " + std::to_string(kBruteforceMaxVertices));
  }
}

// Exact C(n, k), or limit + 1 once it exceeds limit.
std::uint64_t bounded_binomial(std::uint64_t n, std::uint64_t k, std::uint64_t limit) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t value = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    value = value * (n - k + i) / i;
    if (value > limit) return limit + 1;
  }
  return value;
}

// Counts vertex subsets of size k whose internal labels span at most delta.
std::uint64_t count_delta_cliques(const LabelMatrix& labels, std::size_t k, double delta) {
  const auto n = static_cast<Vertex>(labels.vertex_count());
  std::vector<Vertex> current;
  std::uint64_t total = 0;
  auto walk = [&](auto&& self, Vertex start, double lo, double hi) -> void {
    if (current.size() == k) {
      ++total;
      return;
    }
    for (Vertex v = start; v < n; ++v) {
      double next_lo = lo;
      double next_hi = hi;
      for (const Vertex u : current) {
        next_lo = std::min(next_lo, labels.at(u, v));
        next_hi = std::max(next_hi, labels.at(u, v));
      }
      if (!current.empty() && next_hi - next_lo > delta) continue;
      current.push_back(v);
      self(self, v + 1, next_lo, next_hi);
      current.pop_back();
    }
  };
  walk(walk, 0, 1.0, 0.0);
  return total;
}

bool is_clique_of(const StaticGraph& g, const std::vector<Vertex>& q) {
  for (std::size_t i = 0; i < q.size(); ++i) {
    for (std::size_t j = i + 1; j < q.size(); ++j) {
      if (!g.has_edge(q[i], q[j])) return false;
    }
  }
  return true;
}

}  // namespace

std::string_view to_string(PlantMode mode) { return mode == PlantMode::kHalf ? "half" : "full"; }

PlantedInstance build_planted_instance(const StaticGraph& base, double delta, PlantMode mode, std::uint64_t seed) {
  require_delta_open(delta);
  const std::size_t n = base.vertex_count();
  if (n == 0) throw std::invalid_argument("planted instance needs at least one vertex");
  const double planted_hi = mode == PlantMode::kHalf ? delta / 2.0 : delta;
  Rng rng(seed);
  std::vector<TemporalEdge> edges;
  edges.reserve(n * (n - 1) / 2);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      const auto uv = static_cast<Vertex>(u);
      const auto vv = static_cast<Vertex>(v);
      const double label = base.has_edge(uv, vv) ? rng.uniform(0.0, planted_hi) : rng.uniform(delta, 1.0);
      edges.push_back({uv, vv, label});
    }
  }
  return PlantedInstance{base, TemporalGraph(n, std::move(edges)), mode, 0.0, planted_hi, delta, 1.0};
}

ExperimentReport estimate_window_probability(std::int64_t h, double delta, const ExperimentOptions& opts) {
  if (h < 0) throw std::invalid_argument("h must be non-negative");
  if (!(delta >= 0.0 && delta <= 1.0)) throw std::invalid_argument("delta must lie in [0,1]");
  if (opts.trials < 100) throw std::invalid_argument("window-probability estimate needs at least 100 trials");
  ExperimentReport report;
  report.name = "window-prob";
  report.params = {{"h", std::to_string(h)}, {"delta", param(delta)}, {"trials", param(opts.trials)}};
  report.columns = {"fits"};
  report.primary = "fits";
  run_trials(report, opts.trials, opts, [&](std::size_t, std::uint64_t seed) {
    Rng rng(seed);
    double lo = 1.0;
    double hi = 0.0;
    for (std::int64_t i = 0; i < h; ++i) {
      const double x = rng.uniform();
      lo = std::min(lo, x);
      hi = std::max(hi, x);
    }
    return std::vector<double>{(h <= 1 || hi - lo <= delta) ? 1.0 : 0.0};
  });
  const double reference = analytics::window_probability(h, delta);
  const double se = std::sqrt(reference * (1.0 - reference) / static_cast<double>(opts.trials));
  report.diagnostics = {
      {"reference", reference},
      {"successes", static_cast<std::uint64_t>(std::llround(report.aggregate.mean * static_cast<double>(opts.trials)))},
      {"binomial_std_error", se},
      {"band_low", reference - 3.0 * se},
      {"band_high", reference + 3.0 * se},
      {"within_band", std::abs(report.aggregate.mean - reference) <= 3.0 * se},
  };
  return report;
}

ExperimentReport estimate_clique_count(std::size_t n, std::size_t k, double delta, const ExperimentOptions& opts) {
  if (k < 1 || k > n) throw std::invalid_argument("clique-count needs 1 <= k <= n");
  if (!(delta >= 0.0 && delta <= 1.0)) throw std::invalid_argument("delta must lie in [0,1]");
  constexpr std::uint64_t kMaxSubsets = 1'000'000;
  if (bounded_binomial(n, k, kMaxSubsets) > kMaxSubsets) {
    throw InfeasibleConfig("C(n, k) exceeds " + std::to_string(kMaxSubsets) + " subsets");
  }
  if (opts.trials < 1) throw std::invalid_argument("need at least one trial");
  ExperimentReport report;
  report.name = "clique-count";
  report.params = {{"n", param(n)}, {"k", param(k)}, {"delta", param(delta)}, {"trials", param(opts.trials)}};
  report.columns = {"count"};
  report.primary = "count";
  run_trials(report, opts.trials, opts, [&](std::size_t, std::uint64_t seed) {
    const LabelMatrix labels(generate_random_complete(n, seed));
    return std::vector<double>{static_cast<double>(count_delta_cliques(labels, k, delta))};
  });
  const double reference =
      analytics::expected_clique_count(static_cast<std::int64_t>(n), static_cast<std::int64_t>(k), delta);
  const double se = report.aggregate.std_error;
  report.diagnostics = {
      {"reference", reference},
      {"band_low", report.aggregate.mean - 3.0 * se},
      {"band_high", report.aggregate.mean + 3.0 * se},
      {"within_band", std::abs(report.aggregate.mean - reference) <= 3.0 * se},
  };
  return report;
}

ExperimentReport threshold_sweep(const std::vector<std::size_t>& ns, double delta, const ExperimentOptions& opts,
                                 const ThresholdBands& bands) {
  require_delta_open(delta);
  if (ns.empty()) throw std::invalid_argument("threshold sweep needs at least one n");
  if (opts.trials < 1) throw std::invalid_argument("need at least one trial");
  std::string ns_text;
  for (const std::size_t n : ns) {
    if (n < 2) throw std::invalid_argument("threshold sweep needs n >= 2");
    require_solver_feasible(n, opts.solver);
    ns_text += (ns_text.empty() ? "" : ",") + std::to_string(n);
  }
  ExperimentReport report;
  report.name = "threshold";
  report.params = {{"ns", ns_text},
                   {"delta", param(delta)},
                   {"trials", param(opts.trials)},
                   {"mode", std::string(to_string(opts.solver.mode))},
                   {"upper_factor", param(bands.upper)},
                   {"lower_factor", param(bands.lower)}};
  report.columns = {"n", "omega", "k0", "ratio", "optimal", "upper_ok", "lower_ok", "width"};
  report.primary = "ratio";
  run_trials(report, ns.size() * opts.trials, opts, [&](std::size_t i, std::uint64_t seed) {
    const std::size_t n = ns[i / opts.trials];
    const TemporalGraph tg = generate_random_complete(n, derive_seed(seed, 1));
    const CliqueResult q = solve_max_delta_clique(tg, delta, opts.solver, derive_seed(seed, 2));
    const double k0 = analytics::k0_threshold(static_cast<std::int64_t>(n), delta);
    const auto omega = static_cast<double>(q.size());
    return std::vector<double>{static_cast<double>(n),
                               omega,
                               k0,
                               omega / k0,
                               q.optimal ? 1.0 : 0.0,
                               omega <= std::ceil(bands.upper * k0) ? 1.0 : 0.0,
                               omega >= std::floor(bands.lower * k0) ? 1.0 : 0.0,
                               q.width()};
  });

  nlohmann::json per_n = nlohmann::json::array();
  bool monotone = true;
  double previous_median = -1.0;
  for (std::size_t j = 0; j < ns.size(); ++j) {
    std::vector<double> omegas;
    bool upper_ok = true;
    bool lower_ok = true;
    std::size_t truncated = 0;
    for (std::size_t t = 0; t < opts.trials; ++t) {
      const std::vector<double>& v = report.trials[j * opts.trials + t].values;
      omegas.push_back(v[1]);
      if (v[4] == 1.0) {
        upper_ok = upper_ok && v[5] == 1.0;
      } else {
        ++truncated;
      }
      lower_ok = lower_ok && v[6] == 1.0;
    }
    const double k0 = analytics::k0_threshold(static_cast<std::int64_t>(ns[j]), delta);
    const double med = median(omegas);
    monotone = monotone && med >= previous_median;
    previous_median = med;
    per_n.push_back({{"n", ns[j]},
                     {"k0", k0},
                     {"upper_bound", std::ceil(bands.upper * k0)},
                     {"lower_bound", std::floor(bands.lower * k0)},
                     {"median_omega", med},
                     {"min_omega", *std::min_element(omegas.begin(), omegas.end())},
                     {"max_omega", *std::max_element(omegas.begin(), omegas.end())},
                     {"truncated_runs", truncated},
                     {"all_upper_ok", upper_ok},
                     {"all_lower_ok", lower_ok}});
  }
  report.diagnostics = {{"per_n", per_n}, {"median_nondecreasing", monotone}};
  return report;
}

ExperimentReport interval_width_experiment(std::size_t n, double delta, const ExperimentOptions& opts) {
  require_delta_open(delta);
  if (n < 2) throw std::invalid_argument("interval-width needs n >= 2");
  if (opts.trials < 1) throw std::invalid_argument("need at least one trial");
  require_solver_feasible(n, opts.solver);
  ExperimentReport report;
  report.name = "interval-width";
  report.params = {{"n", param(n)},
                   {"delta", param(delta)},
                   {"trials", param(opts.trials)},
                   {"mode", std::string(to_string(opts.solver.mode))}};
  report.columns = {"omega", "interval_min", "interval_max", "width_ratio", "optimal"};
  report.primary = "width_ratio";
  run_trials(report, opts.trials, opts, [&](std::size_t, std::uint64_t seed) {
    const TemporalGraph tg = generate_random_complete(n, derive_seed(seed, 1));
    const CliqueResult q = solve_max_delta_clique(tg, delta, opts.solver, derive_seed(seed, 2));
    return std::vector<double>{static_cast<double>(q.size()), q.interval_min, q.interval_max,
                               q.width() / delta, q.optimal ? 1.0 : 0.0};
  });
  const std::vector<double> ratios = report.column("width_ratio");
  report.diagnostics = {{"median_ratio", median(ratios)},
                        {"min_ratio", *std::min_element(ratios.begin(), ratios.end())},
                        {"max_ratio", *std::max_element(ratios.begin(), ratios.end())}};
  return report;
}

ExperimentReport reduction_experiment(std::size_t n, double delta, const ExperimentOptions& opts) {
  require_delta_open(delta);
  if (n < 2) throw std::invalid_argument("reduction needs n >= 2");
  if (opts.trials < 1) throw std::invalid_argument("need at least one trial");
  require_solver_feasible(n, opts.solver);
  ExperimentReport report;
  report.name = "reduction";
  report.params = {{"n", param(n)},
                   {"delta", param(delta)},
                   {"trials", param(opts.trials)},
                   {"mode", std::string(to_string(opts.solver.mode))}};
  report.columns = {"base_edges", "size",         "base_clique", "in_planted_range", "greedy_size",
                    "beats_greedy", "interval_min", "interval_max", "optimal"};
  report.primary = "size";
  const double half = delta / 2.0;
  run_trials(report, opts.trials, opts, [&](std::size_t, std::uint64_t seed) {
    const StaticGraph base = generate_er(n, delta, derive_seed(seed, 1));
    const PlantedInstance inst = build_planted_instance(base, delta, PlantMode::kHalf, derive_seed(seed, 2));
    const CliqueResult q = solve_max_delta_clique(inst.temporal, half, opts.solver, derive_seed(seed, 3));
    const std::size_t greedy = greedy_clique(base).size();
    const bool in_range = q.interval_min >= 0.0 && q.interval_max <= half;
    return std::vector<double>{static_cast<double>(base.edge_count()),
                               static_cast<double>(q.size()),
                               is_clique_of(base, q.vertices) ? 1.0 : 0.0,
                               in_range ? 1.0 : 0.0,
                               static_cast<double>(greedy),
                               q.size() >= greedy ? 1.0 : 0.0,
                               q.interval_min,
                               q.interval_max,
                               q.optimal ? 1.0 : 0.0};
  });
  const auto total = [&](std::string_view col) {
    const std::vector<double> v = report.column(col);
    return static_cast<std::size_t>(std::count(v.begin(), v.end(), 1.0));
  };
  report.diagnostics = {{"trials", opts.trials},
                        {"base_clique_trials", total("base_clique")},
                        {"in_planted_range_trials", total("in_planted_range")},
                        {"beats_greedy_trials", total("beats_greedy")}};
  return report;
}

ExperimentReport conjecture2_probe(std::size_t n, double delta, const ExperimentOptions& opts, std::size_t bins) {
  require_delta_open(delta);
  if (n < 2) throw std::invalid_argument("conjecture2 probe needs n >= 2");
  if (bins < 1) throw std::invalid_argument("need at least one histogram bin");
  if (opts.trials < 1) throw std::invalid_argument("need at least one trial");
  require_solver_feasible(n, opts.solver);
  ExperimentReport report;
  report.name = "conjecture2";
  report.params = {{"n", param(n)},
                   {"delta", param(delta)},
                   {"trials", param(opts.trials)},
                   {"mode", std::string(to_string(opts.solver.mode))},
                   {"bins", param(bins)}};
  report.columns = {"size", "left", "width", "normalized_left", "in_planted_range", "optimal"};
  report.primary = "left";
  run_trials(report, opts.trials, opts, [&](std::size_t, std::uint64_t seed) {
    const StaticGraph base = generate_er(n, delta, derive_seed(seed, 1));
    const PlantedInstance inst = build_planted_instance(base, delta, PlantMode::kFull, derive_seed(seed, 2));
    const CliqueResult q = solve_max_delta_clique(inst.temporal, delta, opts.solver, derive_seed(seed, 3));
    const double slack = delta - q.width();
    // Position of the interval inside the room it has in [0, delta]; -1 when
    // there is no room or the interval leaves the planted range.
    const bool in_range = q.interval_max <= delta;
    const double normalized = (in_range && slack > 0.0) ? q.interval_min / slack : -1.0;
    return std::vector<double>{static_cast<double>(q.size()), q.interval_min, q.width(), normalized,
                               in_range ? 1.0 : 0.0, q.optimal ? 1.0 : 0.0};
  });

  std::vector<std::size_t> histogram(bins, 0);
  std::vector<double> positions;
  for (const TrialRecord& t : report.trials) {
    const double left = t.values[1];
    const auto bin = std::min(bins - 1, static_cast<std::size_t>(std::max(0.0, left) * static_cast<double>(bins)));
    ++histogram[bin];
    if (t.values[3] >= 0.0) positions.push_back(std::min(1.0, t.values[3]));
  }
  const std::vector<double> lefts = report.column("left");
  const auto outside = static_cast<std::size_t>(
      std::count_if(lefts.begin(), lefts.end(), [&](double x) { return x < 0.0 || x > delta; }));
  report.diagnostics = {{"histogram_range", {0.0, 1.0}},
                        {"histogram", histogram},
                        {"ks_statistic", ks_uniform_statistic(positions)},
                        {"ks_sample_size", positions.size()},
                        {"ks_critical_1pct", positions.empty() ? 0.0 : ks_critical_value(positions.size())},
                        {"left_outside_planted_range", outside}};
  return report;
}

}  // namespace tclique
