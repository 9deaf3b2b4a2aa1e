#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tclique/bitset.hpp"

namespace tclique {

using Vertex = std::int32_t;

struct TemporalEdge {
  Vertex u = 0;
  Vertex v = 0;
  double label = 0.0;

  friend bool operator==(const TemporalEdge&, const TemporalEdge&) = default;
};

// Simple temporal graph: n vertices and at most one label in [0,1] per
// unordered pair. Edges are stored canonically (u < v) sorted by (u, v).
// Immutable after construction.
class TemporalGraph {
 public:
  // Validates and canonicalizes. Throws std::invalid_argument on n == 0,
  // out-of-range endpoints, self-loops, duplicate pairs or labels outside
  // [0,1].
  TemporalGraph(std::size_t n, std::vector<TemporalEdge> edges);

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::span<const TemporalEdge> edges() const { return edges_; }

  std::optional<double> label(Vertex u, Vertex v) const;
  bool is_complete() const { return edges_.size() == n_ * (n_ - 1) / 2; }

  friend bool operator==(const TemporalGraph&, const TemporalGraph&) = default;

 private:
  std::size_t n_;
  std::vector<TemporalEdge> edges_;
  std::vector<std::size_t> row_offsets_;
};

// Unlabeled simple graph with bitset adjacency rows.
class StaticGraph {
 public:
  explicit StaticGraph(std::size_t n);
  StaticGraph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges);

  static StaticGraph complete(std::size_t n);

  // Throws std::invalid_argument on self-loops or out-of-range ids.
  void add_edge(Vertex u, Vertex v);

  std::size_t vertex_count() const { return rows_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  bool has_edge(Vertex u, Vertex v) const { return rows_[u].test(static_cast<std::size_t>(v)); }
  const Bitset& neighbors(Vertex v) const { return rows_[v]; }
  std::size_t degree(Vertex v) const { return rows_[v].count(); }

  std::vector<std::pair<Vertex, Vertex>> edge_list() const;

  friend bool operator==(const StaticGraph&, const StaticGraph&) = default;

 private:
  std::vector<Bitset> rows_;
  std::size_t edge_count_ = 0;
};

// Closed label window [start, start + width]. The upper end may exceed 1;
// labels never do, so no clamping is needed at evaluation time.
struct Window {
  double start = 0.0;
  double width = 0.0;

  bool contains(double label) const { return label >= start && label <= start + width; }
};

// Dense n x n label lookup for the solvers. Absent pairs hold NaN.
class LabelMatrix {
 public:
  explicit LabelMatrix(const TemporalGraph& tg);

  std::size_t vertex_count() const { return n_; }
  double at(Vertex u, Vertex v) const { return labels_[static_cast<std::size_t>(u) * n_ + v]; }
  bool has_edge(Vertex u, Vertex v) const { return at(u, v) == at(u, v); }

 private:
  std::size_t n_;
  std::vector<double> labels_;
};

struct CliqueResult {
  std::vector<Vertex> vertices;  // sorted ascending
  double interval_min = 0.0;
  double interval_max = 0.0;
  bool optimal = true;

  std::size_t size() const { return vertices.size(); }
  double width() const { return interval_max - interval_min; }
};

enum class RejectReason { kVertexOutOfRange, kDuplicateVertex, kMissingEdge, kIntervalTooWide };

struct CliqueRejection {
  RejectReason reason = RejectReason::kMissingEdge;
  Vertex u = -1;
  Vertex v = -1;
  double width = 0.0;

  std::string message() const;
};

// Outcome of a delta-clique check: either a CliqueResult or the reason the
// vertex set was rejected.
struct CliqueCheck {
  std::optional<CliqueResult> result;
  CliqueRejection rejection;

  explicit operator bool() const { return result.has_value(); }
};

// Generation. Deterministic per arguments on a given build.
TemporalGraph generate_random_complete(std::size_t n, std::uint64_t seed);
StaticGraph generate_er(std::size_t n, double p, std::uint64_t seed);

// Pairs whose label lies in the closed window. Throws std::invalid_argument
// if start is outside [0,1] or width is negative.
StaticGraph window_graph(const TemporalGraph& tg, const Window& w);

// Accepts q iff every pair of q is an edge and max label - min label <= delta.
// Order of q is irrelevant; the result lists vertices sorted.
CliqueCheck is_delta_clique(const TemporalGraph& tg, std::span<const Vertex> q, double delta);

// Builds the CliqueResult of a vertex set already known to be a clique of tg.
// Singletons get a zero-width interval at their smallest incident label (0
// if isolated); the empty set gets [0, 0].
CliqueResult make_clique_result(const LabelMatrix& labels, std::vector<Vertex> vertices);

}  // namespace tclique
