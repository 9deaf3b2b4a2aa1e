#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tclique/graph.hpp"

namespace tclique {

enum class SolverMode { kBruteforce, kExact, kHeuristic };

std::string_view to_string(SolverMode mode);
// Throws std::invalid_argument on unknown names.
SolverMode parse_solver_mode(std::string_view name);

struct SolverConfig {
  SolverMode mode = SolverMode::kExact;
  std::optional<double> time_budget_secs;
  int heuristic_restarts = 2;
  bool report_witness = true;
  // Lifts the n <= 20 guard of the brute-force solver.
  bool allow_large_bruteforce = false;
  // Anchor windows sampled by the heuristic when there are too many edges to
  // try them all. The densest windows are added on top.
  std::size_t heuristic_anchor_samples = 8;
};

// Thrown when a configuration cannot run on the given input, e.g. brute
// force on more than 20 vertices without the override.
class InfeasibleConfig : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kBruteforceMaxVertices = 20;

struct StaticCliqueResult {
  std::vector<Vertex> vertices;  // sorted
  bool optimal = true;
};

// Maximum clique of g by branch and bound with greedy-coloring bounds.
// Only cliques strictly larger than lower_bound are searched for; when none
// exists the result is empty. With lower_bound = 0 the result is a maximum
// clique. On budget exhaustion returns the incumbent with optimal = false.
StaticCliqueResult static_max_clique(const StaticGraph& g, std::size_t lower_bound = 0,
                                     std::optional<double> time_budget_secs = std::nullopt);

// Greedy clique: repeatedly adds the candidate with the most neighbours
// among the remaining candidates. Ties go to the smaller id.
std::vector<Vertex> greedy_clique(const StaticGraph& g);

// Degeneracy (max over the peeling order of the minimum remaining degree).
std::size_t degeneracy(const StaticGraph& g);

// Exhaustive search over all vertex subsets, pruned only by the hereditary
// delta-clique property. Returns the lexicographically smallest maximum set.
// Throws InfeasibleConfig for n > 20 unless allow_large is set.
CliqueResult max_delta_clique_bruteforce(const TemporalGraph& tg, double delta,
                                         bool allow_large = false);

// Exact maximum delta-clique by enumerating windows anchored at each edge
// label and solving the static clique problem inside each window.
CliqueResult max_delta_clique_exact(const TemporalGraph& tg, double delta,
                                    const SolverConfig& cfg = {});

// Anchor-window sampling with greedy construction and local search. Always
// returns a valid delta-clique of size >= 1; not necessarily maximum.
CliqueResult max_delta_clique_heuristic(const TemporalGraph& tg, double delta,
                                        const SolverConfig& cfg, std::uint64_t seed);

// Dispatches on cfg.mode.
CliqueResult solve_max_delta_clique(const TemporalGraph& tg, double delta,
                                    const SolverConfig& cfg, std::uint64_t seed = 0);

}  // namespace tclique
