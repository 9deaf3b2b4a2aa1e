#include <stdexcept>

#include "tclique/graph.hpp"
#include "tclique/rng.hpp"

namespace tclique {

TemporalGraph generate_random_complete(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("generate_random_complete: n must be positive");
  Rng rng(seed);
  std::vector<TemporalEdge> edges;
  edges.reserve(n * (n - 1) / 2);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v), rng.uniform()});
    }
  }
  return TemporalGraph(n, std::move(edges));
}

StaticGraph generate_er(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("generate_er: p must lie in [0,1]");
  Rng rng(seed);
  StaticGraph g(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      // Draw even when p is 0 or 1 so the stream layout is independent of p.
      if (rng.uniform() < p) g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
  }
  return g;
}

}  // namespace tclique
