#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "tclique/graph.hpp"
#include "tclique/solver.hpp"
#include "tclique/stats.hpp"

namespace tclique {

struct TrialRecord {
  std::size_t index = 0;
  std::uint64_t seed = 0;
  std::vector<double> values;  // one per ExperimentReport::columns entry
};

// Per-trial records plus aggregate statistics of one experiment run. Trials
// are always stored in index order, whatever order they were computed in.
struct ExperimentReport {
  std::string name;
  std::uint64_t master_seed = 0;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<std::string> columns;
  std::string primary;  // column summarized in `aggregate`
  std::vector<TrialRecord> trials;
  Summary aggregate;
  nlohmann::json diagnostics = nlohmann::json::object();

  std::vector<double> column(std::string_view name) const;
  Summary summarize_column(std::string_view name) const;

  // Sorts trials by index and recomputes `aggregate` from them.
  void finalize();

  // 16 hex digits of FNV-1a over the canonical "key=value;" params string.
  std::string params_hash() const;
  // <name>_<params-hash>_<seed>
  std::string file_stem() const;

  std::string to_csv() const;
  nlohmann::json to_json() const;

  // Writes <stem>.csv and <stem>.json into dir (created if missing). Returns
  // the two paths.
  std::pair<std::filesystem::path, std::filesystem::path> write_files(const std::filesystem::path& dir) const;
};

struct ExperimentOptions {
  std::size_t trials = 20;
  std::uint64_t seed = 0;
  std::size_t threads = 0;  // 0 = all cores
  SolverConfig solver;
};

// Finite-n operationalization of the (1 +/- o(1)) k0 threshold:
// omega <= ceil(upper * k0) and omega >= floor(lower * k0).
struct ThresholdBands {
  double upper = 1.25;
  double lower = 0.5;
};

// Largest n the exact solver is allowed on in the harness.
inline constexpr std::size_t kExactHarnessMaxVertices = 300;

enum class PlantMode { kHalf, kFull };

std::string_view to_string(PlantMode mode);

// Complete temporal graph built around a static base graph: base edges get
// labels uniform on [0, delta/2] (half) or [0, delta] (full), all other pairs
// uniform on [delta, 1].
struct PlantedInstance {
  StaticGraph base;
  TemporalGraph temporal;
  PlantMode mode;
  double planted_lo = 0.0;
  double planted_hi = 0.0;
  double filler_lo = 0.0;
  double filler_hi = 1.0;
};

PlantedInstance build_planted_instance(const StaticGraph& base, double delta, PlantMode mode, std::uint64_t seed);

// Fraction of trials whose h uniform labels fit in a delta window.
// Requires trials >= 100.
ExperimentReport estimate_window_probability(std::int64_t h, double delta, const ExperimentOptions& opts);

// Number of size-k delta-cliques per random complete instance. Requires
// C(n, k) <= 1e6.
ExperimentReport estimate_clique_count(std::size_t n, std::size_t k, double delta, const ExperimentOptions& opts);

// Maximum delta-clique size per (n, trial), with k0 band indicators.
ExperimentReport threshold_sweep(const std::vector<std::size_t>& ns, double delta, const ExperimentOptions& opts,
                                 const ThresholdBands& bands = {});

// Width of the label interval of a maximum delta-clique, relative to delta.
ExperimentReport interval_width_experiment(std::size_t n, double delta, const ExperimentOptions& opts);

// Plants G(n, delta) in the low label range (half mode) and checks that the
// maximum (delta/2)-clique is a clique of the base graph inside [0, delta/2].
ExperimentReport reduction_experiment(std::size_t n, double delta, const ExperimentOptions& opts);

// Position of the label interval of the maximum delta-clique on full-mode
// planted instances. Exploratory: reports a histogram and a KS statistic.
ExperimentReport conjecture2_probe(std::size_t n, double delta, const ExperimentOptions& opts,
                                   std::size_t bins = 10);

}  // namespace tclique
