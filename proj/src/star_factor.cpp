#include "staruniform/star_factor.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <queue>
#include <stdexcept>
#include <unordered_map>

#include "staruniform/domination.hpp"
#include "staruniform/matching.hpp"

namespace staruniform {
namespace {

using Mask = std::uint64_t;

void require_no_isolated(const Graph& g) {
  if (has_isolated_vertex(g)) throw GraphError("graph has an isolated vertex; no star-factor exists");
}

std::vector<Mask> adjacency_masks(const Graph& g) {
  std::vector<Mask> adj(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v = 0; v < g.order(); ++v)
    for (Vertex w : g.neighbors(v)) adj[v] |= Mask{1} << w;
  return adj;
}

VertexSet members(Mask m) {
  VertexSet out;
  for (; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

/// counts(U) = bitset of achievable star counts when exactly U is still
/// uncovered. Lowest vertex v of U is either a centre (any nonempty leaf set
/// from its uncovered neighbours) or a leaf of a neighbour u whose star has
/// at least one more leaf; K_{1,1} stars are always taken in the first form.
class CountOracle {
 public:
  explicit CountOracle(const Graph& g) : adj_(adjacency_masks(g)) {
    if (g.order() <= kDenseMemoOrder) dense_.assign(std::size_t{1} << g.order(), kUnknown);
  }

  Mask counts(Mask uncovered) {
    if (uncovered == 0) return 1;
    if (!dense_.empty()) {
      Mask& slot = dense_[uncovered];
      if (slot == kUnknown) slot = expand(uncovered);
      return slot;
    }
    if (auto it = sparse_.find(uncovered); it != sparse_.end()) return it->second;
    const Mask result = expand(uncovered);
    sparse_.emplace(uncovered, result);
    return result;
  }

 private:
  static constexpr int kDenseMemoOrder = 20;
  static constexpr Mask kUnknown = ~Mask{0};

  Mask expand(Mask uncovered) {
    const Vertex v = std::countr_zero(uncovered);
    const Mask v_bit = Mask{1} << v;
    const Mask nbrs = adj_[v] & uncovered;
    Mask result = 0;
    for (Mask leaves = nbrs; leaves != 0; leaves = (leaves - 1) & nbrs)
      result |= counts(uncovered & ~(v_bit | leaves)) << 1;
    for (Mask rest = nbrs; rest != 0; rest &= rest - 1) {
      const Vertex u = std::countr_zero(rest);
      const Mask u_bit = Mask{1} << u;
      const Mask extra = adj_[u] & uncovered & ~v_bit;
      for (Mask leaves = extra; leaves != 0; leaves = (leaves - 1) & extra)
        result |= counts(uncovered & ~(v_bit | u_bit | leaves)) << 1;
    }
    return result;
  }

  std::vector<Mask> adj_;
  std::vector<Mask> dense_;
  std::unordered_map<Mask, Mask> sparse_;
};

class FactorStream {
 public:
  FactorStream(const Graph& g, const std::function<void(const StarFactor&)>& visit)
      : order_(g.order()), adj_(adjacency_masks(g)), visit_(visit) {}

  void run(Mask uncovered) {
    if (uncovered == 0) {
      visit_(canonicalize(StarFactor{order_, stars_}));
      return;
    }
    const Vertex v = std::countr_zero(uncovered);
    const Mask v_bit = Mask{1} << v;
    const Mask nbrs = adj_[v] & uncovered;
    for (Mask leaves = nbrs; leaves != 0; leaves = (leaves - 1) & nbrs) {
      stars_.push_back({v, members(leaves)});
      run(uncovered & ~(v_bit | leaves));
      stars_.pop_back();
    }
    for (Mask rest = nbrs; rest != 0; rest &= rest - 1) {
      const Vertex u = std::countr_zero(rest);
      const Mask u_bit = Mask{1} << u;
      const Mask extra = adj_[u] & uncovered & ~v_bit;
      for (Mask leaves = extra; leaves != 0; leaves = (leaves - 1) & extra) {
        stars_.push_back({u, members(leaves | v_bit)});
        run(uncovered & ~(v_bit | u_bit | leaves));
        stars_.pop_back();
      }
    }
  }

 private:
  int order_;
  std::vector<Mask> adj_;
  const std::function<void(const StarFactor&)>& visit_;
  std::vector<Star> stars_;
};

Mask full_mask(int n) { return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

}  // namespace

StarFactor canonicalize(StarFactor factor) {
  for (Star& s : factor.stars) {
    std::sort(s.leaves.begin(), s.leaves.end());
    if (s.leaves.size() == 1 && s.leaves.front() < s.center) std::swap(s.center, s.leaves.front());
  }
  std::sort(factor.stars.begin(), factor.stars.end(),
            [](const Star& a, const Star& b) { return a.center < b.center; });
  return factor;
}

std::optional<std::string> star_factor_violation(const Graph& g, const StarFactor& factor) {
  if (factor.order != g.order()) return "factor order differs from graph order";
  std::vector<int> seen(static_cast<std::size_t>(g.order()), 0);
  const auto visit = [&](Vertex v) -> std::optional<std::string> {
    if (v < 0 || v >= g.order()) return "vertex " + std::to_string(v) + " out of range";
    if (seen[v]++ > 0) return "vertex " + std::to_string(v) + " lies in two stars";
    return std::nullopt;
  };
  for (const Star& s : factor.stars) {
    if (s.leaves.empty()) return "star centred at " + std::to_string(s.center) + " has no leaves";
    if (auto err = visit(s.center)) return err;
    for (Vertex leaf : s.leaves) {
      if (auto err = visit(leaf)) return err;
      if (!g.adjacent(s.center, leaf))
        return "centre " + std::to_string(s.center) + " is not adjacent to leaf " + std::to_string(leaf);
    }
    if (s.leaves.size() == 1 && s.leaves.front() < s.center)
      return "K11 star " + std::to_string(s.center) + "-" + std::to_string(s.leaves.front()) +
             " must be centred at its lower endpoint";
  }
  for (Vertex v = 0; v < g.order(); ++v)
    if (seen[v] == 0) return "vertex " + std::to_string(v) + " is not covered";
  return std::nullopt;
}

bool is_star_factor(const Graph& g, const StarFactor& factor) { return !star_factor_violation(g, factor); }

StarFactor max_component_star_factor(const Graph& g) {
  require_no_isolated(g);
  const Matching m = maximum_matching(g);
  std::vector<Star> stars;
  std::vector<int> star_of(static_cast<std::size_t>(g.order()), -1);
  for (const Edge& e : m.edges()) {
    star_of[e.u] = star_of[e.v] = static_cast<int>(stars.size());
    stars.push_back({e.u, {e.v}});
  }
  for (Vertex x = 0; x < g.order(); ++x) {
    if (m.covers(x)) continue;
    // Maximality: every neighbour of an uncovered vertex is covered.
    const Vertex host = g.neighbors(x).front();
    Star& s = stars[star_of[host]];
    if (s.center != host) {
      if (s.leaves.size() != 1)
        throw std::logic_error("matched edge reached from two uncovered vertices; matching not maximum");
      s.leaves = {s.center};
      s.center = host;
    }
    s.leaves.push_back(x);
    star_of[x] = star_of[host];
  }
  return canonicalize(StarFactor{g.order(), std::move(stars)});
}

StarFactor min_component_star_factor(const Graph& g) {
  require_no_isolated(g);
  if (!is_connected(g)) throw GraphError("minimum star-factor construction requires a connected graph");
  const int n = g.order();
  const VertexSet dom = minimum_dominating_set(g).vertices;
  std::vector<bool> in_dom(static_cast<std::size_t>(n), false);
  for (Vertex v : dom) in_dom[v] = true;

  // Spanning BFS forest of B, the bipartite graph of G-edges across (V - D, D).
  std::vector<int> depth(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<Vertex>> children(static_cast<std::size_t>(n));
  std::vector<Vertex> roots;
  for (Vertex r = 0; r < n; ++r) {
    if (depth[r] >= 0) continue;
    roots.push_back(r);
    depth[r] = 0;
    std::queue<Vertex> queue;
    queue.push(r);
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop();
      for (Vertex w : g.neighbors(u)) {
        if (in_dom[u] == in_dom[w] || depth[w] >= 0) continue;
        depth[w] = depth[u] + 1;
        parent[w] = u;
        children[u].push_back(w);
        queue.push(w);
      }
    }
  }

  std::vector<Vertex> order(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return depth[a] > depth[b]; });

  std::vector<Star> stars;
  std::vector<int> star_of(static_cast<std::size_t>(n), -1);
  for (Vertex v : order) {
    if (star_of[v] >= 0 || parent[v] < 0) continue;
    const Vertex p = parent[v];
    if (star_of[p] < 0) {
      star_of[p] = static_cast<int>(stars.size());
      stars.push_back({p, {}});
    }
    stars[star_of[p]].leaves.push_back(v);
    star_of[v] = star_of[p];
  }

  for (Vertex r : roots) {
    if (star_of[r] >= 0) continue;
    if (children[r].empty()) throw std::logic_error("vertex without a neighbour across the dominating set");
    const Vertex c = children[r].front();
    Star& s = stars[star_of[c]];
    if (s.center == c) {
      s.leaves.push_back(r);
      star_of[r] = star_of[c];
    } else if (s.leaves.size() == 1) {
      const Vertex g_center = s.center;
      s.center = c;
      s.leaves = {r, g_center};
      star_of[r] = star_of[c];
    } else {
      std::erase(s.leaves, c);
      star_of[c] = star_of[r] = static_cast<int>(stars.size());
      stars.push_back({r, {c}});
    }
  }

  StarFactor factor = canonicalize(StarFactor{n, std::move(stars)});
  // Centres of any star-factor dominate, so no factor has fewer than |D|
  // stars; every star of B meets D, so this one has at most |D|.
  if (factor.component_count() != static_cast<int>(dom.size()) || !is_star_factor(g, factor))
    throw std::logic_error("minimum star-factor construction produced an invalid factor");
  return factor;
}

std::vector<int> enumerate_component_counts(const Graph& g, int cap) {
  const int limit = std::min(cap, kMaxOracleOrder);
  if (g.order() > limit)
    throw GraphError("star-factor oracle limited to " + std::to_string(limit) + " vertices, got " +
                     std::to_string(g.order()));
  require_no_isolated(g);
  CountOracle oracle(g);
  const Mask counts = oracle.counts(full_mask(g.order()));
  std::vector<int> out;
  for (Mask m = counts; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

void for_each_star_factor(const Graph& g, const std::function<void(const StarFactor&)>& visit) {
  if (g.order() > kMaxStreamOrder)
    throw GraphError("star-factor streaming limited to " + std::to_string(kMaxStreamOrder) + " vertices");
  require_no_isolated(g);
  FactorStream(g, visit).run(full_mask(g.order()));
}

}  // namespace staruniform
