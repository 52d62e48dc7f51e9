// Brute-force reference implementations used only by tests. Everything here
// is exponential and deliberately naive; none of it calls the library's
// matching, domination, canonical-form or star-factor code.
#ifndef STARUNIFORM_TESTS_ORACLES_HPP
#define STARUNIFORM_TESTS_ORACLES_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "staruniform/graph.hpp"

namespace oracle {

using staruniform::Edge;
using staruniform::Graph;
using staruniform::Vertex;

/// Every maximum matching, each as a sorted edge list.
inline std::vector<std::vector<Edge>> all_maximum_matchings(const Graph& g) {
  const std::vector<Edge> edges = g.edges();
  std::vector<std::vector<Edge>> best;
  std::size_t best_size = 0;
  std::vector<Edge> current;
  std::vector<bool> used(static_cast<std::size_t>(g.order()), false);
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (current.size() > best_size) {
      best_size = current.size();
      best.clear();
    }
    if (current.size() == best_size) best.push_back(current);
    for (std::size_t i = from; i < edges.size(); ++i) {
      const Edge e = edges[i];
      if (used[e.u] || used[e.v]) continue;
      used[e.u] = used[e.v] = true;
      current.push_back(e);
      self(self, i + 1);
      current.pop_back();
      used[e.u] = used[e.v] = false;
    }
  };
  rec(rec, 0);
  return best;
}

inline int matching_number(const Graph& g) {
  const auto all = all_maximum_matchings(g);
  return static_cast<int>(all.front().size());
}

/// Vertices missed by at least one maximum matching.
inline std::vector<Vertex> missed_by_some_maximum_matching(const Graph& g) {
  std::vector<bool> missed(static_cast<std::size_t>(g.order()), false);
  for (const auto& m : all_maximum_matchings(g)) {
    std::vector<bool> covered(static_cast<std::size_t>(g.order()), false);
    for (const Edge& e : m) covered[e.u] = covered[e.v] = true;
    for (Vertex v = 0; v < g.order(); ++v)
      if (!covered[v]) missed[v] = true;
  }
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v)
    if (missed[v]) out.push_back(v);
  return out;
}

inline bool dominates(const Graph& g, std::uint32_t subset) {
  for (Vertex v = 0; v < g.order(); ++v) {
    bool ok = (subset >> v) & 1u;
    for (Vertex w : g.neighbors(v)) ok = ok || ((subset >> w) & 1u);
    if (!ok) return false;
  }
  return true;
}

/// Smallest dominating set size by trying subsets in order of size.
inline int domination_number(const Graph& g) {
  const int n = g.order();
  int best = n;
  for (std::uint32_t s = 0; s < (1u << n); ++s)
    if (std::popcount(s) < best && dominates(g, s)) best = std::popcount(s);
  return best;
}

inline bool connected_without(const Graph& g, Vertex removed) {
  std::vector<bool> seen(static_cast<std::size_t>(g.order()), false);
  Vertex start = removed == 0 ? 1 : 0;
  if (start >= g.order()) return true;
  std::vector<Vertex> stack{start};
  seen[start] = true;
  seen[removed] = true;
  while (!stack.empty()) {
    const Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(u))
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

/// Cut vertices by deleting each vertex and testing connectivity.
inline std::vector<Vertex> cut_vertices(const Graph& g) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v)
    if (!connected_without(g, v)) out.push_back(v);
  return out;
}

/// Upper-triangle bitstring (graph6 order) of g relabelled by perm, where
/// perm[new] = old.
inline std::uint64_t code_under(const Graph& g, const std::vector<Vertex>& perm) {
  std::uint64_t bits = 0;
  for (int j = 1; j < g.order(); ++j)
    for (int i = 0; i < j; ++i) bits = (bits << 1) | (g.adjacent(perm[i], perm[j]) ? 1u : 0u);
  return bits;
}

/// Minimum code over all n! orderings.
inline std::uint64_t min_code(const Graph& g) {
  std::vector<Vertex> perm(static_cast<std::size_t>(g.order()));
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do best = std::min(best, code_under(g, perm));
  while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline bool isomorphic(const Graph& a, const Graph& b) {
  return a.order() == b.order() && a.size() == b.size() && min_code(a) == min_code(b);
}

/// Component counts of all star-factors, by enumerating every spanning edge
/// subset and keeping those whose components are all stars with >= 1 edge.
inline std::set<int> star_factor_counts(const Graph& g) {
  const std::vector<Edge> edges = g.edges();
  const int n = g.order();
  std::set<int> out;
  for (std::uint32_t mask = 0; mask < (1u << edges.size()); ++mask) {
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < edges.size(); ++i)
      if ((mask >> i) & 1u) {
        ++deg[edges[i].u];
        ++deg[edges[i].v];
        adj[edges[i].u].push_back(edges[i].v);
        adj[edges[i].v].push_back(edges[i].u);
      }
    if (std::any_of(deg.begin(), deg.end(), [](int d) { return d == 0; })) continue;
    // A component is a star iff it is a tree in which some vertex touches
    // every edge: edges = vertices - 1 and max degree = edges.
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    int components = 0;
    bool ok = true;
    for (Vertex r = 0; r < n && ok; ++r) {
      if (comp[r] >= 0) continue;
      std::vector<Vertex> members{r};
      comp[r] = components;
      for (std::size_t h = 0; h < members.size(); ++h)
        for (Vertex w : adj[members[h]])
          if (comp[w] < 0) {
            comp[w] = components;
            members.push_back(w);
          }
      int degree_sum = 0, top = 0;
      for (Vertex v : members) {
        degree_sum += deg[v];
        top = std::max(top, deg[v]);
      }
      const int m = degree_sum / 2;
      ok = m == static_cast<int>(members.size()) - 1 && top == m;
      ++components;
    }
    if (ok) out.insert(components);
  }
  return out;
}

}  // namespace oracle

#endif  // STARUNIFORM_TESTS_ORACLES_HPP
