#include <algorithm>
#include <limits>

#include "tclique/solver.hpp"

namespace tclique {
namespace {

// Depth-first walk over vertex subsets in lexicographic order. A subset is
// extended only while it stays a delta-clique, which is hereditary, so no
// valid subset is skipped.
class SubsetWalk {
 public:
  SubsetWalk(const LabelMatrix& labels, double delta) : labels_(labels), delta_(delta) {}

  std::vector<Vertex> run() {
    best_ = {0};
    visit(0, std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity());
    return best_;
  }

 private:
  void visit(Vertex start, double lo, double hi) {
    const auto n = static_cast<Vertex>(labels_.vertex_count());
    for (Vertex v = start; v < n; ++v) {
      double next_lo = lo;
      double next_hi = hi;
      bool ok = true;
      for (const Vertex u : current_) {
        const double label = labels_.at(u, v);
        if (label != label) {
          ok = false;
          break;
        }
        next_lo = std::min(next_lo, label);
        next_hi = std::max(next_hi, label);
      }
      if (!ok || (!current_.empty() && next_hi - next_lo > delta_)) continue;
      current_.push_back(v);
      if (current_.size() > best_.size()) best_ = current_;
      visit(v + 1, next_lo, next_hi);
      current_.pop_back();
    }
  }

  const LabelMatrix& labels_;
  double delta_;
  std::vector<Vertex> current_;
  std::vector<Vertex> best_;
};

}  // namespace

CliqueResult max_delta_clique_bruteforce(const TemporalGraph& tg, double delta, bool allow_large) {
  if (tg.vertex_count() > kBruteforceMaxVertices && !allow_large) {
    throw InfeasibleConfig("brute force refuses n = " + std::to_string(tg.vertex_count()) +
                           " > " + std::to_string(kBruteforceMaxVertices));
  }
  const LabelMatrix labels(tg);
  return make_clique_result(labels, SubsetWalk(labels, delta).run());
}

}  // namespace tclique
