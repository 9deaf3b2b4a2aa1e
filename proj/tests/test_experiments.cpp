#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numeric>

#include "oracles.hpp"
#include "tclique/analytics.hpp"
#include "tclique/experiments.hpp"
#include "tclique/parallel.hpp"
#include "tclique/rng.hpp"

namespace tclique {
namespace {

ExperimentOptions options(std::size_t trials, std::uint64_t seed, std::size_t threads = 1) {
  ExperimentOptions opts;
  opts.trials = trials;
  opts.seed = seed;
  opts.threads = threads;
  return opts;
}

TEST(StatsTest, Summary) {
  const std::vector<double> values{1.0, 2.0, 3.0, 4.0};
  const Summary s = summarize(values);
  EXPECT_EQ(s.count, 4U);
  EXPECT_DOUBLE_EQ(s.mean, 2.5);
  EXPECT_DOUBLE_EQ(s.variance, 5.0 / 3.0);
  EXPECT_DOUBLE_EQ(s.std_error, std::sqrt(5.0 / 3.0 / 4.0));
  EXPECT_EQ(summarize(std::vector<double>{7.0}).variance, 0.0);
  EXPECT_EQ(summarize(std::vector<double>{}).count, 0U);
  EXPECT_EQ(median({3.0, 1.0, 2.0}), 2.0);
  EXPECT_EQ(median({4.0, 1.0, 2.0, 3.0}), 2.5);
}

TEST(StatsTest, KsStatistic) {
  EXPECT_NEAR(ks_uniform_statistic({0.5}), 0.5, 1e-15);
  EXPECT_NEAR(ks_uniform_statistic({0.25, 0.75}), 0.25, 1e-15);
  EXPECT_NEAR(ks_critical_value(100), 1.6276 / 10.0, 1e-4);
}

TEST(ParallelTest, VisitsEveryIndexAndRethrows) {
  std::vector<int> hits(1000, 0);
  parallel_for(hits.size(), 4, [&](std::size_t i) { hits[i] += 1; });
  EXPECT_EQ(std::accumulate(hits.begin(), hits.end(), 0), 1000);
  EXPECT_THROW(parallel_for(10, 3,
                            [](std::size_t i) {
                              if (i == 7) throw std::runtime_error("boom");
                            }),
               std::runtime_error);
}

TEST(WindowProbExperimentTest, WithinBand) {
  for (const std::int64_t h : {1, 3, 6}) {
    const ExperimentReport r = estimate_window_probability(h, 0.5, options(5000, 12 + h));
    EXPECT_TRUE(r.diagnostics["within_band"].get<bool>()) << r.diagnostics.dump();
    EXPECT_EQ(r.trials.size(), 5000U);
    EXPECT_DOUBLE_EQ(r.diagnostics["reference"].get<double>(), analytics::window_probability(h, 0.5));
  }
  EXPECT_THROW(estimate_window_probability(3, 0.5, options(99, 1)), std::invalid_argument);
}

TEST(CliqueCountExperimentTest, NearExpectation) {
  const ExperimentReport r = estimate_clique_count(10, 4, 0.3, options(400, 5));
  const double reference = analytics::expected_clique_count(10, 4, 0.3);
  EXPECT_NEAR(r.aggregate.mean, reference, 4.0 * r.aggregate.std_error);
  EXPECT_THROW(estimate_clique_count(60, 10, 0.3, options(5, 1)), InfeasibleConfig);
  EXPECT_THROW(estimate_clique_count(5, 6, 0.3, options(5, 1)), std::invalid_argument);
}

// Counts from the experiment agree with the brute-force definition.
TEST(CliqueCountExperimentTest, CountsMatchDirectEnumeration) {
  const ExperimentReport r = estimate_clique_count(7, 3, 0.4, options(5, 21));
  for (const TrialRecord& t : r.trials) {
    const TemporalGraph tg = generate_random_complete(7, t.seed);
    double count = 0;
    for (Vertex a = 0; a < 7; ++a)
      for (Vertex b = a + 1; b < 7; ++b)
        for (Vertex c = b + 1; c < 7; ++c) {
          const std::vector<Vertex> q{a, b, c};
          if (is_delta_clique(tg, q, 0.4)) ++count;
        }
    EXPECT_EQ(t.values[0], count);
  }
}

TEST(ThresholdExperimentTest, SmallSweepWithinBands) {
  const ExperimentReport r = threshold_sweep({30, 50}, 0.3, options(10, 7));
  ASSERT_EQ(r.trials.size(), 20U);
  for (const auto& entry : r.diagnostics["per_n"]) {
    EXPECT_TRUE(entry["all_upper_ok"].get<bool>());
    EXPECT_TRUE(entry["all_lower_ok"].get<bool>());
    EXPECT_EQ(entry["truncated_runs"].get<int>(), 0);
  }
  for (const double w : r.column("width")) EXPECT_LE(w, 0.3);
}

TEST(ThresholdExperimentTest, Guards) {
  EXPECT_THROW(threshold_sweep({50}, 0.0, options(2, 1)), std::invalid_argument);
  EXPECT_THROW(threshold_sweep({}, 0.3, options(2, 1)), std::invalid_argument);
  EXPECT_THROW(threshold_sweep({301}, 0.3, options(1, 1)), InfeasibleConfig);
  ExperimentOptions brute = options(1, 1);
  brute.solver.mode = SolverMode::kBruteforce;
  EXPECT_THROW(threshold_sweep({21}, 0.3, brute), InfeasibleConfig);
}

TEST(PlantedInstanceTest, LabelRanges) {
  const StaticGraph base = generate_er(30, 0.4, 2);
  for (const PlantMode mode : {PlantMode::kHalf, PlantMode::kFull}) {
    const PlantedInstance inst = build_planted_instance(base, 0.4, mode, 9);
    EXPECT_TRUE(inst.temporal.is_complete());
    const double hi = mode == PlantMode::kHalf ? 0.2 : 0.4;
    EXPECT_EQ(inst.planted_hi, hi);
    for (const TemporalEdge& e : inst.temporal.edges()) {
      if (base.has_edge(e.u, e.v)) {
        EXPECT_GE(e.label, 0.0);
        EXPECT_LE(e.label, hi);
      } else {
        EXPECT_GE(e.label, 0.4);
        EXPECT_LE(e.label, 1.0);
      }
    }
  }
  EXPECT_THROW(build_planted_instance(base, 1.0, PlantMode::kHalf, 1), std::invalid_argument);
  EXPECT_THROW(build_planted_instance(base, 0.0, PlantMode::kHalf, 1), std::invalid_argument);
}

TEST(PlantedInstanceTest, EmptyAndCompleteBases) {
  const PlantedInstance empty = build_planted_instance(StaticGraph(8), 0.3, PlantMode::kHalf, 4);
  // Nothing is planted, so any (delta/2)-clique of size >= 2 sits in the filler range.
  const CliqueResult none = max_delta_clique_exact(empty.temporal, 0.15);
  EXPECT_GE(none.interval_min, 0.3);
  const PlantedInstance full = build_planted_instance(StaticGraph::complete(8), 0.3, PlantMode::kHalf, 4);
  EXPECT_EQ(max_delta_clique_exact(full.temporal, 0.15).size(), 8U);
}

TEST(ReductionExperimentTest, SmallRun) {
  const ExperimentReport r = reduction_experiment(40, 0.5, options(6, 3));
  for (const TrialRecord& t : r.trials) {
    EXPECT_EQ(t.values[2], 1.0);  // base_clique
    EXPECT_EQ(t.values[3], 1.0);  // in_planted_range
    EXPECT_GE(t.values[1], t.values[4]);
  }
  EXPECT_EQ(r.diagnostics["base_clique_trials"].get<int>(), 6);
}

// The reduction's maximum equals the static clique number of the base graph.
TEST(ReductionExperimentTest, SizeEqualsBaseCliqueNumber) {
  const ExperimentReport r = reduction_experiment(25, 0.5, options(4, 8));
  for (const TrialRecord& t : r.trials) {
    const StaticGraph base = generate_er(25, 0.5, derive_seed(t.seed, 1));
    EXPECT_EQ(t.values[1], static_cast<double>(oracle::max_clique_size(base)));
  }
}

TEST(Conjecture2ProbeTest, HistogramAndKs) {
  const ExperimentReport r = conjecture2_probe(40, 0.4, options(12, 5), 5);
  const auto& hist = r.diagnostics["histogram"];
  ASSERT_EQ(hist.size(), 5U);
  int total = 0;
  for (const auto& c : hist) total += c.get<int>();
  EXPECT_EQ(total, 12);
  EXPECT_LE(r.diagnostics["ks_sample_size"].get<int>(), 12);
  EXPECT_TRUE(r.diagnostics.contains("ks_statistic"));
  EXPECT_TRUE(r.diagnostics.contains("ks_critical_1pct"));
  for (const double x : r.column("normalized_left")) {
    if (x < 0.0) continue;
    EXPECT_GE(x, 0.0);
    EXPECT_LE(x, 1.0);
  }
}

TEST(ReportTest, AggregateMatchesTrials) {
  const ExperimentReport r = interval_width_experiment(40, 0.3, options(8, 2));
  const std::vector<double> ratios = r.column("width_ratio");
  double sum = 0.0;
  for (const double v : ratios) sum += v;
  const double mean = sum / static_cast<double>(ratios.size());
  double ss = 0.0;
  for (const double v : ratios) ss += (v - mean) * (v - mean);
  EXPECT_NEAR(r.aggregate.mean, mean, 1e-12);
  EXPECT_NEAR(r.aggregate.variance, ss / static_cast<double>(ratios.size() - 1), 1e-12);
  for (const double v : ratios) EXPECT_LE(v, 1.0);
}

TEST(ReportTest, ThreadCountDoesNotChangeOutput) {
  const std::string one = threshold_sweep({20, 40}, 0.3, options(6, 99, 1)).to_csv();
  const std::string four = threshold_sweep({20, 40}, 0.3, options(6, 99, 4)).to_csv();
  EXPECT_EQ(one, four);
  const std::string c1 = conjecture2_probe(30, 0.4, options(5, 3, 1)).to_csv();
  const std::string c4 = conjecture2_probe(30, 0.4, options(5, 3, 4)).to_csv();
  EXPECT_EQ(c1, c4);
}

TEST(ReportTest, FileNamingAndCsvLayout) {
  const ExperimentReport r = estimate_window_probability(2, 0.25, options(100, 42));
  const std::string stem = r.file_stem();
  EXPECT_EQ(stem.rfind("window-prob_", 0), 0U);
  EXPECT_EQ(stem.substr(stem.size() - 3), "_42");
  EXPECT_EQ(r.params_hash().size(), 16U);
  EXPECT_NE(r.params_hash(), estimate_window_probability(2, 0.3, options(100, 42)).params_hash());
  EXPECT_EQ(r.to_csv().substr(0, 17), "trial,seed,fits\n0");

  const auto dir = std::filesystem::temp_directory_path() / "tclique_report_test";
  std::filesystem::remove_all(dir);
  const auto [csv, json] = r.write_files(dir);
  EXPECT_EQ(csv.filename().string(), stem + ".csv");
  EXPECT_EQ(json.filename().string(), stem + ".json");
  std::ifstream in(csv);
  const std::string contents((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  EXPECT_EQ(contents, r.to_csv());
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace tclique
