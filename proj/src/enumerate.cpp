#include "staruniform/enumerate.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <string>
#include <unordered_set>

#include "staruniform/canonical.hpp"

namespace staruniform {
namespace {

void require_exhaustive_order(int n) {
  if (n < 0 || n > kMaxExhaustiveOrder)
    throw GraphError("exhaustive enumeration supports orders 0.." + std::to_string(kMaxExhaustiveOrder) +
                     ", got " + std::to_string(n));
}

// Classes of order k+1 from the classes of order k.
std::vector<Graph> extend_classes(const std::vector<Graph>& level) {
  const int k = level.front().order();
  std::vector<CanonicalForm> seen;
  for (const Graph& base : level)
    for (std::uint32_t nbrs = 0; nbrs < (1u << k); ++nbrs) {
      Graph g(k + 1);
      for (const Edge& e : base.edges()) g.add_edge(e.u, e.v);
      for (Vertex v = 0; v < k; ++v)
        if (nbrs & (1u << v)) g.add_edge(v, k);
      seen.push_back(canonical_form(g));
    }
  std::sort(seen.begin(), seen.end());
  seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
  std::vector<Graph> out;
  out.reserve(seen.size());
  for (const CanonicalForm& f : seen) out.push_back(canonical_graph(f));
  return out;
}

const std::vector<Graph>& all_classes(int n) {
  static std::mutex mutex;
  // deque: references handed out stay valid as later orders are appended.
  static std::deque<std::vector<Graph>> by_order{{Graph(0)}};
  std::lock_guard lock(mutex);
  while (static_cast<int>(by_order.size()) <= n) by_order.push_back(extend_classes(by_order.back()));
  return by_order[n];
}

}  // namespace

void enumerate_graphs(int n, const GraphFilter& filter, const GraphVisitor& visit) {
  require_exhaustive_order(n);
  const int pairs = n * (n - 1) / 2;
  std::vector<Edge> pair_list;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i) pair_list.push_back({i, j});

  for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
    Graph g(n);
    for (int k = 0; k < pairs; ++k)
      if (mask & (1u << k)) g.add_edge(pair_list[k].u, pair_list[k].v);
    if (!filter || filter(g)) visit(g);
  }
}

std::vector<Graph> isomorphism_classes(int n, const GraphFilter& filter) {
  require_exhaustive_order(n);
  const std::vector<Graph>& classes = all_classes(n);
  if (!filter) return classes;
  std::vector<Graph> out;
  std::copy_if(classes.begin(), classes.end(), std::back_inserter(out), filter);
  return out;
}

std::vector<Graph> dedupe_isomorphic(std::span<const Graph> graphs) {
  std::unordered_set<CanonicalForm> seen;
  std::vector<Graph> out;
  for (const Graph& g : graphs)
    if (seen.insert(canonical_form(g)).second) out.push_back(g);
  return out;
}

GraphSampler::GraphSampler(int n, std::uint64_t seed, double edge_prob)
    : n_(n), p_(edge_prob), rng_(seed) {
  if (n < 0) throw GraphError("sample order must be nonnegative");
  if (!(edge_prob > 0.0 && edge_prob < 1.0)) throw GraphError("edge probability must lie in (0, 1)");
}

Graph GraphSampler::next() {
  constexpr double kScale = 1.0 / 9007199254740992.0;  // 2^-53
  Graph g(n_);
  for (Vertex j = 1; j < n_; ++j)
    for (Vertex i = 0; i < j; ++i)
      if (static_cast<double>(rng_() >> 11) * kScale < p_) g.add_edge(i, j);
  return g;
}

std::vector<Graph> sample_graphs(int n, std::size_t count, std::uint64_t seed, double edge_prob) {
  GraphSampler sampler(n, seed, edge_prob);
  std::vector<Graph> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(sampler.next());
  return out;
}

}  // namespace staruniform
