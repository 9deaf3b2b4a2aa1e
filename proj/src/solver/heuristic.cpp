#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "deadline.hpp"
#include "tclique/rng.hpp"
#include "tclique/solver.hpp"

namespace tclique {
namespace {

// Below this many edges every anchor window is searched.
constexpr std::size_t kAllAnchorsLimit = 256;
constexpr std::size_t kDensestAnchors = 4;

// Tabu local search for a large clique in one window graph: add moves when
// possible, otherwise (1,1)-swaps, otherwise a perturbation that keeps only
// the neighbours of a random vertex.
class WindowSearch {
 public:
  WindowSearch(const std::vector<Bitset>& adj, const std::vector<Bitset>& non_adj, Rng& rng)
      : adj_(adj), non_adj_(non_adj), n_(adj.size()), rng_(rng), miss_(n_, 0), in_(n_, 0), tabu_until_(n_, 0) {}

  std::vector<Vertex> run(std::vector<Vertex> start, std::size_t iterations) {
    for (const Vertex v : start) add(v);
    best_ = clique_;
    std::vector<std::size_t> moves;
    for (std::size_t it = 1; it <= iterations; ++it) {
      moves.clear();
      for (std::size_t v = 0; v < n_; ++v) {
        if (!in_[v] && miss_[v] == 0) moves.push_back(v);
      }
      if (!moves.empty()) {
        add(static_cast<Vertex>(moves[rng_.below(moves.size())]));
      } else {
        for (std::size_t v = 0; v < n_; ++v) {
          if (!in_[v] && miss_[v] == 1 && tabu_until_[v] <= it) moves.push_back(v);
        }
        if (!moves.empty()) {
          const auto v = static_cast<Vertex>(moves[rng_.below(moves.size())]);
          const Vertex out = *std::find_if(clique_.begin(), clique_.end(),
                                           [&](Vertex w) { return !adj_[v].test(static_cast<std::size_t>(w)); });
          remove(out);
          add(v);
          tabu_until_[static_cast<std::size_t>(out)] = it + 7 + rng_.below(4);
        } else {
          const auto v = static_cast<Vertex>(rng_.below(n_));
          std::vector<Vertex> drop;
          for (const Vertex w : clique_) {
            if (w != v && !adj_[v].test(static_cast<std::size_t>(w))) drop.push_back(w);
          }
          for (const Vertex w : drop) remove(w);
          if (!in_[static_cast<std::size_t>(v)]) add(v);
        }
      }
      if (clique_.size() > best_.size()) best_ = clique_;
    }
    return best_;
  }

 private:
  void add(Vertex v) {
    const auto vi = static_cast<std::size_t>(v);
    in_[vi] = 1;
    clique_.push_back(v);
    non_adj_[vi].for_each([&](std::size_t u) { ++miss_[u]; });
  }

  void remove(Vertex v) {
    const auto vi = static_cast<std::size_t>(v);
    in_[vi] = 0;
    clique_.erase(std::find(clique_.begin(), clique_.end(), v));
    non_adj_[vi].for_each([&](std::size_t u) { --miss_[u]; });
  }

  const std::vector<Bitset>& adj_;
  const std::vector<Bitset>& non_adj_;  // complement without the diagonal
  std::size_t n_;
  Rng& rng_;
  std::vector<std::size_t> miss_;
  std::vector<char> in_;
  std::vector<std::size_t> tabu_until_;
  std::vector<Vertex> clique_;
  std::vector<Vertex> best_;
};

// Greedy by residual degree, optionally seeded with a first vertex.
std::vector<Vertex> greedy_start(const std::vector<Bitset>& adj, std::optional<std::size_t> first) {
  std::vector<Vertex> clique;
  Bitset candidates(adj.size());
  candidates.set_all();
  if (first) {
    clique.push_back(static_cast<Vertex>(*first));
    candidates &= adj[*first];
  }
  while (candidates.any()) {
    std::size_t pick = candidates.size();
    std::size_t pick_degree = 0;
    candidates.for_each([&](std::size_t v) {
      const std::size_t d = adj[v].count_and(candidates);
      if (pick == candidates.size() || d > pick_degree) {
        pick = v;
        pick_degree = d;
      }
    });
    clique.push_back(static_cast<Vertex>(pick));
    candidates &= adj[pick];
  }
  return clique;
}

}  // namespace

CliqueResult max_delta_clique_heuristic(const TemporalGraph& tg, double delta,
                                        const SolverConfig& cfg, std::uint64_t seed) {
  if (!(delta >= 0.0 && delta <= 1.0)) throw std::invalid_argument("delta must lie in [0,1]");
  if (cfg.heuristic_restarts < 1) throw std::invalid_argument("heuristic_restarts must be at least 1");
  const detail::Deadline deadline(cfg.time_budget_secs);
  const LabelMatrix labels(tg);
  const std::size_t n = tg.vertex_count();
  const auto edges = tg.edges();

  std::vector<std::size_t> by_label(edges.size());
  std::iota(by_label.begin(), by_label.end(), 0);
  std::stable_sort(by_label.begin(), by_label.end(),
                   [&](std::size_t a, std::size_t b) { return edges[a].label < edges[b].label; });
  std::vector<double> sorted_labels(by_label.size());
  for (std::size_t i = 0; i < by_label.size(); ++i) sorted_labels[i] = edges[by_label[i]].label;

  // Positions in by_label of the anchors to try.
  std::vector<std::size_t> anchors;
  if (edges.size() <= kAllAnchorsLimit) {
    anchors.resize(edges.size());
    std::iota(anchors.begin(), anchors.end(), 0);
  } else {
    Rng pick(derive_seed(seed, 0));
    for (std::size_t i = 0; i < cfg.heuristic_anchor_samples; ++i) anchors.push_back(pick.below(edges.size()));
    std::vector<std::size_t> window_size(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const auto end = std::upper_bound(sorted_labels.begin(), sorted_labels.end(), sorted_labels[i] + delta);
      window_size[i] = static_cast<std::size_t>(end - sorted_labels.begin()) - i;
    }
    std::vector<std::size_t> dense(edges.size());
    std::iota(dense.begin(), dense.end(), 0);
    const std::size_t keep = std::min(kDensestAnchors, dense.size());
    std::partial_sort(dense.begin(), dense.begin() + static_cast<std::ptrdiff_t>(keep), dense.end(),
                      [&](std::size_t a, std::size_t b) {
                        return window_size[a] != window_size[b] ? window_size[a] > window_size[b] : a < b;
                      });
    anchors.insert(anchors.end(), dense.begin(), dense.begin() + static_cast<std::ptrdiff_t>(keep));
    std::sort(anchors.begin(), anchors.end());
    anchors.erase(std::unique(anchors.begin(), anchors.end()), anchors.end());
  }

  const std::size_t iterations = std::clamp<std::size_t>(10 * n, 200, 10000);
  std::vector<Vertex> best{0};
  std::vector<Bitset> adj(n, Bitset(n));
  std::vector<Bitset> non_adj(n, Bitset(n));
  const auto restarts = static_cast<std::size_t>(cfg.heuristic_restarts);
  for (std::size_t a = 0; a < anchors.size() && !deadline.expired(); ++a) {
    const double lo = sorted_labels[anchors[a]];
    const double hi = lo + delta;
    for (Bitset& row : adj) row.clear();
    for (std::size_t i = anchors[a]; i < by_label.size() && sorted_labels[i] <= hi; ++i) {
      const TemporalEdge& e = edges[by_label[i]];
      adj[static_cast<std::size_t>(e.u)].set(static_cast<std::size_t>(e.v));
      adj[static_cast<std::size_t>(e.v)].set(static_cast<std::size_t>(e.u));
    }
    for (std::size_t v = 0; v < n; ++v) {
      non_adj[v].set_all();
      non_adj[v].subtract(adj[v]);
      non_adj[v].reset(v);
    }
    for (std::size_t r = 0; r < restarts; ++r) {
      Rng rng(derive_seed(seed, 1 + a * restarts + r));
      std::optional<std::size_t> first;
      if (r > 0) first = rng.below(n);
      std::vector<Vertex> found = WindowSearch(adj, non_adj, rng).run(greedy_start(adj, first), iterations);
      if (found.size() > best.size()) best = std::move(found);
    }
  }

  CliqueResult result = make_clique_result(labels, std::move(best));
  result.optimal = false;
  if (!is_delta_clique(tg, result.vertices, delta)) {
    throw std::logic_error("heuristic produced an invalid delta-clique");
  }
  return result;
}

CliqueResult solve_max_delta_clique(const TemporalGraph& tg, double delta, const SolverConfig& cfg,
                                    std::uint64_t seed) {
  switch (cfg.mode) {
    case SolverMode::kBruteforce:
      return max_delta_clique_bruteforce(tg, delta, cfg.allow_large_bruteforce);
    case SolverMode::kExact:
      return max_delta_clique_exact(tg, delta, cfg);
    case SolverMode::kHeuristic:
      return max_delta_clique_heuristic(tg, delta, cfg, seed);
  }
  throw std::invalid_argument("unknown solver mode");
}

}  // namespace tclique
