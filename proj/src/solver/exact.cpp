#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "deadline.hpp"
#include "tclique/solver.hpp"

namespace tclique {

std::string_view to_string(SolverMode mode) {
  switch (mode) {
    case SolverMode::kBruteforce:
      return "bruteforce";
    case SolverMode::kExact:
      return "exact";
    case SolverMode::kHeuristic:
      return "heuristic";
  }
  return "unknown";
}

SolverMode parse_solver_mode(std::string_view name) {
  if (name == "bruteforce") return SolverMode::kBruteforce;
  if (name == "exact") return SolverMode::kExact;
  if (name == "heuristic") return SolverMode::kHeuristic;
  throw std::invalid_argument("unknown solver mode \"" + std::string(name) + "\"");
}

// Every delta-clique Q with at least one edge lies in the window anchored at
// its minimum label, and contains the edge e0 carrying that label. So for
// each anchor edge (u, v, t) it suffices to search the common neighbours w
// of u and v with both labels in [t, t + delta], restricted to edges inside
// the same window. The best size over all anchors is optimal.
CliqueResult max_delta_clique_exact(const TemporalGraph& tg, double delta, const SolverConfig& cfg) {
  if (!(delta >= 0.0 && delta <= 1.0)) throw std::invalid_argument("delta must lie in [0,1]");
  const detail::Deadline deadline(cfg.time_budget_secs);
  const LabelMatrix labels(tg);
  const std::size_t n = tg.vertex_count();
  const auto edges = tg.edges();

  std::vector<std::size_t> by_label(edges.size());
  std::iota(by_label.begin(), by_label.end(), 0);
  // edges() is sorted by (u, v); a stable sort keeps that as the tie-break.
  std::stable_sort(by_label.begin(), by_label.end(),
                   [&](std::size_t a, std::size_t b) { return edges[a].label < edges[b].label; });

  std::vector<Vertex> best{0};
  if (!edges.empty()) best = {edges[by_label[0]].u, edges[by_label[0]].v};
  bool optimal = true;

  std::vector<Vertex> cand;
  cand.reserve(n);
  for (const std::size_t idx : by_label) {
    if (deadline.expired()) {
      optimal = false;
      break;
    }
    const TemporalEdge& anchor = edges[idx];
    const double lo = anchor.label;
    const double hi = anchor.label + delta;
    const auto inside = [&](double label) { return label >= lo && label <= hi; };

    cand.clear();
    for (std::size_t w = 0; w < n; ++w) {
      const auto wv = static_cast<Vertex>(w);
      if (wv == anchor.u || wv == anchor.v) continue;
      if (inside(labels.at(anchor.u, wv)) && inside(labels.at(anchor.v, wv))) cand.push_back(wv);
    }
    if (cand.size() + 2 <= best.size()) continue;

    // Local window graph: anchors at 0 and 1, candidates after them.
    const std::size_t local_n = cand.size() + 2;
    StaticGraph local(local_n);
    local.add_edge(0, 1);
    for (std::size_t i = 0; i < cand.size(); ++i) {
      local.add_edge(0, static_cast<Vertex>(i + 2));
      local.add_edge(1, static_cast<Vertex>(i + 2));
      for (std::size_t j = i + 1; j < cand.size(); ++j) {
        if (inside(labels.at(cand[i], cand[j]))) {
          local.add_edge(static_cast<Vertex>(i + 2), static_cast<Vertex>(j + 2));
        }
      }
    }
    // Certificates that no clique of size best + 1 exists here.
    const std::size_t target = best.size() + 1;
    if (local.edge_count() < target * (target - 1) / 2) continue;
    if (degeneracy(local) < best.size()) continue;

    StaticGraph inner(cand.size());
    for (const auto& [a, b] : local.edge_list()) {
      if (a >= 2) inner.add_edge(a - 2, b - 2);
    }
    const StaticCliqueResult found = static_max_clique(inner, best.size() - 2, deadline.remaining());
    if (!found.vertices.empty() && found.vertices.size() + 2 > best.size()) {
      best = {anchor.u, anchor.v};
      for (const Vertex i : found.vertices) best.push_back(cand[static_cast<std::size_t>(i)]);
    }
    if (!found.optimal) {
      optimal = false;
      break;
    }
  }

  CliqueResult result = make_clique_result(labels, std::move(best));
  result.optimal = optimal;
  return result;
}

}  // namespace tclique
