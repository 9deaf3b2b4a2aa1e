#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "tclique/graph.hpp"

namespace tclique {

std::string CliqueRejection::message() const {
  std::ostringstream out;
  switch (reason) {
    case RejectReason::kVertexOutOfRange:
      out << "vertex " << u << " out of range";
      break;
    case RejectReason::kDuplicateVertex:
      out << "vertex " << u << " listed twice";
      break;
    case RejectReason::kMissingEdge:
      out << "missing edge (" << u << ", " << v << ")";
      break;
    case RejectReason::kIntervalTooWide:
      out << "label interval width " << width << " exceeds delta";
      break;
  }
  return out.str();
}

CliqueCheck is_delta_clique(const TemporalGraph& tg, std::span<const Vertex> q, double delta) {
  CliqueCheck check;
  std::vector<Vertex> sorted(q.begin(), q.end());
  std::sort(sorted.begin(), sorted.end());
  const auto n = static_cast<Vertex>(tg.vertex_count());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] < 0 || sorted[i] >= n) {
      check.rejection = {RejectReason::kVertexOutOfRange, sorted[i], -1, 0.0};
      return check;
    }
    if (i > 0 && sorted[i] == sorted[i - 1]) {
      check.rejection = {RejectReason::kDuplicateVertex, sorted[i], -1, 0.0};
      return check;
    }
  }

  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    for (std::size_t j = i + 1; j < sorted.size(); ++j) {
      const std::optional<double> label = tg.label(sorted[i], sorted[j]);
      if (!label) {
        check.rejection = {RejectReason::kMissingEdge, sorted[i], sorted[j], 0.0};
        return check;
      }
      lo = std::min(lo, *label);
      hi = std::max(hi, *label);
    }
  }

  if (sorted.size() >= 2 && hi - lo > delta) {
    check.rejection = {RejectReason::kIntervalTooWide, -1, -1, hi - lo};
    return check;
  }

  CliqueResult result;
  if (sorted.size() >= 2) {
    result.interval_min = lo;
    result.interval_max = hi;
  } else if (sorted.size() == 1) {
    double smallest = std::numeric_limits<double>::infinity();
    for (const TemporalEdge& e : tg.edges()) {
      if (e.u == sorted[0] || e.v == sorted[0]) smallest = std::min(smallest, e.label);
    }
    if (std::isfinite(smallest)) result.interval_min = result.interval_max = smallest;
  }
  result.vertices = std::move(sorted);
  check.result = std::move(result);
  return check;
}

CliqueResult make_clique_result(const LabelMatrix& labels, std::vector<Vertex> vertices) {
  std::sort(vertices.begin(), vertices.end());
  CliqueResult result;
  if (vertices.size() >= 2) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      for (std::size_t j = i + 1; j < vertices.size(); ++j) {
        const double label = labels.at(vertices[i], vertices[j]);
        lo = std::min(lo, label);
        hi = std::max(hi, label);
      }
    }
    result.interval_min = lo;
    result.interval_max = hi;
  } else if (vertices.size() == 1) {
    double smallest = std::numeric_limits<double>::infinity();
    for (std::size_t w = 0; w < labels.vertex_count(); ++w) {
      const double label = labels.at(vertices[0], static_cast<Vertex>(w));
      if (label == label) smallest = std::min(smallest, label);
    }
    if (std::isfinite(smallest)) result.interval_min = result.interval_max = smallest;
  }
  result.vertices = std::move(vertices);
  return result;
}

}  // namespace tclique
