#include <algorithm>
#include <numeric>

#include "deadline.hpp"
#include "tclique/solver.hpp"

namespace tclique {
namespace {

// Bitset branch and bound in the MCQ/BBMC family. Vertices are renumbered by
// non-increasing degree so that greedy color classes built in bit order give
// tight bounds near the front of the candidate set.
class CliqueSearch {
 public:
  CliqueSearch(const StaticGraph& g, std::size_t lower_bound, const detail::Deadline& deadline)
      : deadline_(deadline), best_size_(lower_bound) {
    const std::size_t n = g.vertex_count();
    order_.resize(n);
    std::iota(order_.begin(), order_.end(), 0);
    std::vector<std::size_t> deg(n);
    for (std::size_t v = 0; v < n; ++v) deg[v] = g.degree(static_cast<Vertex>(v));
    std::stable_sort(order_.begin(), order_.end(),
                     [&](std::size_t a, std::size_t b) { return deg[a] > deg[b]; });
    std::vector<std::size_t> position(n);
    for (std::size_t i = 0; i < n; ++i) position[order_[i]] = i;
    adj_.assign(n, Bitset(n));
    for (std::size_t i = 0; i < n; ++i) {
      g.neighbors(static_cast<Vertex>(order_[i])).for_each([&](std::size_t w) { adj_[i].set(position[w]); });
    }
  }

  StaticCliqueResult run() {
    Bitset candidates(adj_.size());
    candidates.set_all();
    std::vector<std::size_t> current;
    if (candidates.any()) expand(candidates, current);
    StaticCliqueResult result;
    for (const std::size_t i : best_) result.vertices.push_back(static_cast<Vertex>(order_[i]));
    std::sort(result.vertices.begin(), result.vertices.end());
    result.optimal = !timed_out_;
    return result;
  }

 private:
  void color_sort(Bitset uncolored, std::vector<std::size_t>& verts, std::vector<std::size_t>& colors) const {
    std::size_t color = 0;
    while (uncolored.any()) {
      ++color;
      Bitset open = uncolored;
      while (open.any()) {
        const std::size_t v = open.first();
        open.reset(v);
        uncolored.reset(v);
        open.subtract(adj_[v]);
        verts.push_back(v);
        colors.push_back(color);
      }
    }
  }

  void expand(Bitset candidates, std::vector<std::size_t>& current) {
    if ((++nodes_ & 255U) == 0 && deadline_.expired()) timed_out_ = true;
    if (timed_out_) return;
    std::vector<std::size_t> verts;
    std::vector<std::size_t> colors;
    color_sort(candidates, verts, colors);
    for (std::size_t i = verts.size(); i-- > 0;) {
      if (current.size() + colors[i] <= best_size_) return;
      const std::size_t v = verts[i];
      current.push_back(v);
      Bitset next = candidates;
      next &= adj_[v];
      if (next.none()) {
        if (current.size() > best_size_) {
          best_size_ = current.size();
          best_ = current;
        }
      } else {
        expand(std::move(next), current);
      }
      current.pop_back();
      candidates.reset(v);
      if (timed_out_) return;
    }
  }

  const detail::Deadline& deadline_;
  std::vector<std::size_t> order_;
  std::vector<Bitset> adj_;
  std::size_t best_size_;
  std::vector<std::size_t> best_;
  std::size_t nodes_ = 0;
  bool timed_out_ = false;
};

}  // namespace

StaticCliqueResult static_max_clique(const StaticGraph& g, std::size_t lower_bound,
                                     std::optional<double> time_budget_secs) {
  const detail::Deadline deadline(time_budget_secs);
  return CliqueSearch(g, lower_bound, deadline).run();
}

std::vector<Vertex> greedy_clique(const StaticGraph& g) {
  std::vector<Vertex> clique;
  Bitset candidates(g.vertex_count());
  candidates.set_all();
  while (candidates.any()) {
    std::size_t pick = candidates.size();
    std::size_t pick_degree = 0;
    candidates.for_each([&](std::size_t v) {
      const std::size_t d = g.neighbors(static_cast<Vertex>(v)).count_and(candidates);
      if (pick == candidates.size() || d > pick_degree) {
        pick = v;
        pick_degree = d;
      }
    });
    clique.push_back(static_cast<Vertex>(pick));
    candidates &= g.neighbors(static_cast<Vertex>(pick));
  }
  std::sort(clique.begin(), clique.end());
  return clique;
}

std::size_t degeneracy(const StaticGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> deg(n);
  for (std::size_t v = 0; v < n; ++v) deg[v] = g.degree(static_cast<Vertex>(v));
  std::vector<bool> removed(n, false);
  std::size_t result = 0;
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t pick = n;
    for (std::size_t v = 0; v < n; ++v) {
      if (!removed[v] && (pick == n || deg[v] < deg[pick])) pick = v;
    }
    result = std::max(result, deg[pick]);
    removed[pick] = true;
    g.neighbors(static_cast<Vertex>(pick)).for_each([&](std::size_t w) {
      if (!removed[w]) --deg[w];
    });
  }
  return result;
}

}  // namespace tclique
