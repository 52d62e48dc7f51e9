#include "staruniform/domination.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace staruniform {
namespace {

using Mask = std::uint64_t;

class DominationSearch {
 public:
  explicit DominationSearch(const Graph& g) : n_(g.order()), closed_(static_cast<std::size_t>(g.order())) {
    if (n_ > kMaxDominationOrder)
      throw GraphError("domination supports at most " + std::to_string(kMaxDominationOrder) + " vertices");
    all_ = n_ == 64 ? ~Mask{0} : (Mask{1} << n_) - 1;
    for (Vertex v = 0; v < n_; ++v) {
      closed_[v] = Mask{1} << v;
      for (Vertex w : g.neighbors(v)) closed_[v] |= Mask{1} << w;
    }
    reach_ = max_degree(g) + 1;
  }

  VertexSet run() {
    best_ = greedy();
    found_ = false;
    current_.clear();
    branch(0);
    VertexSet out = best_;
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  VertexSet greedy() const {
    VertexSet chosen;
    Mask dominated = 0;
    while (dominated != all_) {
      Vertex pick = 0;
      int gain = -1;
      for (Vertex v = 0; v < n_; ++v) {
        const int here = std::popcount(closed_[v] & ~dominated);
        if (here > gain) {
          gain = here;
          pick = v;
        }
      }
      chosen.push_back(pick);
      dominated |= closed_[pick];
    }
    return chosen;
  }

  void branch(Mask dominated) {
    const int size = static_cast<int>(current_.size());
    if (dominated == all_) {
      // Before the first hit, a set matching the greedy size still counts so
      // the answer comes from the search order rather than from greedy.
      if (!found_ || size < static_cast<int>(best_.size())) {
        best_ = current_;
        found_ = true;
      }
      return;
    }
    const Mask open = all_ & ~dominated;
    const int lower = (std::popcount(open) + reach_ - 1) / reach_;
    const int limit = static_cast<int>(best_.size()) - (found_ ? 1 : 0);
    if (size + lower > limit) return;

    const Vertex u = std::countr_zero(open);
    for (Mask choices = closed_[u]; choices != 0; choices &= choices - 1) {
      const Vertex w = std::countr_zero(choices);
      current_.push_back(w);
      branch(dominated | closed_[w]);
      current_.pop_back();
    }
  }

  int n_;
  Mask all_ = 0;
  int reach_ = 1;
  std::vector<Mask> closed_;
  VertexSet best_;
  VertexSet current_;
  bool found_ = false;
};

}  // namespace

bool is_dominating(const Graph& g, std::span<const Vertex> set) {
  require_vertex_subset(g, set);
  std::vector<bool> covered(static_cast<std::size_t>(g.order()), false);
  for (Vertex v : set) {
    covered[v] = true;
    for (Vertex w : g.neighbors(v)) covered[w] = true;
  }
  return std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
}

DominatingSet minimum_dominating_set(const Graph& g) {
  if (g.order() == 0) return {{}, true};
  return {DominationSearch(g).run(), true};
}

int domination_number(const Graph& g) { return static_cast<int>(minimum_dominating_set(g).vertices.size()); }

}  // namespace staruniform
