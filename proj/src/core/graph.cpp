#include "tclique/graph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace tclique {

TemporalGraph::TemporalGraph(std::size_t n, std::vector<TemporalEdge> edges)
    : n_(n), edges_(std::move(edges)) {
  if (n_ == 0) throw std::invalid_argument("temporal graph needs at least one vertex");
  const auto limit = static_cast<Vertex>(n_);
  for (TemporalEdge& e : edges_) {
    if (e.u == e.v) {
      throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
    }
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u < 0 || e.v >= limit) {
      throw std::invalid_argument("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                                  ") out of range for n = " + std::to_string(n_));
    }
    if (!(e.label >= 0.0 && e.label <= 1.0)) {
      throw std::invalid_argument("label of edge (" + std::to_string(e.u) + ", " +
                                  std::to_string(e.v) + ") outside [0,1]");
    }
  }
  std::sort(edges_.begin(), edges_.end(), [](const TemporalEdge& a, const TemporalEdge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  for (std::size_t i = 1; i < edges_.size(); ++i) {
    if (edges_[i].u == edges_[i - 1].u && edges_[i].v == edges_[i - 1].v) {
      throw std::invalid_argument("duplicate edge (" + std::to_string(edges_[i].u) + ", " +
                                  std::to_string(edges_[i].v) + ")");
    }
  }
  row_offsets_.assign(n_ + 1, 0);
  for (const TemporalEdge& e : edges_) ++row_offsets_[static_cast<std::size_t>(e.u) + 1];
  for (std::size_t i = 0; i < n_; ++i) row_offsets_[i + 1] += row_offsets_[i];
}

std::optional<double> TemporalGraph::label(Vertex u, Vertex v) const {
  if (u > v) std::swap(u, v);
  if (u < 0 || static_cast<std::size_t>(v) >= n_ || u == v) return std::nullopt;
  const auto first = edges_.begin() + static_cast<std::ptrdiff_t>(row_offsets_[u]);
  const auto last = edges_.begin() + static_cast<std::ptrdiff_t>(row_offsets_[u + 1]);
  const auto it = std::lower_bound(first, last, v,
                                   [](const TemporalEdge& e, Vertex key) { return e.v < key; });
  if (it == last || it->v != v) return std::nullopt;
  return it->label;
}

StaticGraph::StaticGraph(std::size_t n) : rows_(n, Bitset(n)) {}

StaticGraph::StaticGraph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges)
    : StaticGraph(n) {
  for (const auto& [u, v] : edges) add_edge(u, v);
}

StaticGraph StaticGraph::complete(std::size_t n) {
  StaticGraph g(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return g;
}

void StaticGraph::add_edge(Vertex u, Vertex v) {
  const auto n = static_cast<Vertex>(rows_.size());
  if (u < 0 || v < 0 || u >= n || v >= n) throw std::invalid_argument("static edge out of range");
  if (u == v) throw std::invalid_argument("static graph cannot hold self-loops");
  if (rows_[u].test(static_cast<std::size_t>(v))) return;
  rows_[u].set(static_cast<std::size_t>(v));
  rows_[v].set(static_cast<std::size_t>(u));
  ++edge_count_;
}

std::vector<std::pair<Vertex, Vertex>> StaticGraph::edge_list() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(edge_count_);
  for (std::size_t u = 0; u < rows_.size(); ++u) {
    rows_[u].for_each([&](std::size_t v) {
      if (v > u) out.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    });
  }
  return out;
}

LabelMatrix::LabelMatrix(const TemporalGraph& tg)
    : n_(tg.vertex_count()),
      labels_(n_ * n_, std::numeric_limits<double>::quiet_NaN()) {
  for (const TemporalEdge& e : tg.edges()) {
    labels_[static_cast<std::size_t>(e.u) * n_ + e.v] = e.label;
    labels_[static_cast<std::size_t>(e.v) * n_ + e.u] = e.label;
  }
}

StaticGraph window_graph(const TemporalGraph& tg, const Window& w) {
  if (!(w.start >= 0.0 && w.start <= 1.0)) throw std::invalid_argument("window start outside [0,1]");
  if (!(w.width >= 0.0)) throw std::invalid_argument("window width must be non-negative");
  StaticGraph g(tg.vertex_count());
  for (const TemporalEdge& e : tg.edges()) {
    if (w.contains(e.label)) g.add_edge(e.u, e.v);
  }
  return g;
}

}  // namespace tclique
