#include "staruniform/graph.hpp"

#include <algorithm>
#include <queue>

namespace staruniform {

Graph::Graph(int order) : n_(order) {
  if (order < 0) throw GraphError("graph order must be nonnegative");
  adj_.resize(static_cast<std::size_t>(order));
  matrix_.assign(static_cast<std::size_t>(order) * order, 0);
}

Graph Graph::from_edges(int order, std::span<const Edge> edges) {
  Graph g(order);
  for (const Edge& e : edges) g.add_edge(e.u, e.v);
  return g;
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= n_)
    throw GraphError("vertex " + std::to_string(v) + " out of range for order " +
                     std::to_string(n_));
}

void Graph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
  if (adjacent(u, v)) return;
  matrix_[static_cast<std::size_t>(u) * n_ + v] = 1;
  matrix_[static_cast<std::size_t>(v) * n_ + u] = 1;
  auto& nu = adj_[u];
  nu.insert(std::lower_bound(nu.begin(), nu.end(), v), v);
  auto& nv = adj_[v];
  nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
  ++edge_count_;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : adj_[u])
      if (u < v) out.push_back({u, v});
  return out;
}

int min_degree(const Graph& g) {
  if (g.order() == 0) return 0;
  int best = g.degree(0);
  for (Vertex v = 1; v < g.order(); ++v) best = std::min(best, g.degree(v));
  return best;
}

int max_degree(const Graph& g) {
  int best = 0;
  for (Vertex v = 0; v < g.order(); ++v) best = std::max(best, g.degree(v));
  return best;
}

bool has_isolated_vertex(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) == 0) return true;
  return false;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> out;
  std::vector<bool> seen(static_cast<std::size_t>(g.order()), false);
  for (Vertex root = 0; root < g.order(); ++root) {
    if (seen[root]) continue;
    VertexSet comp{root};
    seen[root] = true;
    for (std::size_t head = 0; head < comp.size(); ++head)
      for (Vertex w : g.neighbors(comp[head]))
        if (!seen[w]) {
          seen[w] = true;
          comp.push_back(w);
        }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) {
  // The empty graph counts as connected; nothing downstream depends on it.
  return g.order() <= 1 || connected_components(g).size() == 1;
}

void require_vertex_subset(const Graph& g, std::span<const Vertex> set) {
  for (Vertex v : set)
    if (v < 0 || v >= g.order())
      throw GraphError("vertex " + std::to_string(v) + " is not in the graph");
}

VertexSet make_vertex_set(const Graph& g, std::span<const Vertex> members) {
  require_vertex_subset(g, members);
  VertexSet out(members.begin(), members.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

VertexSet neighbors_of_set(const Graph& g, std::span<const Vertex> set) {
  require_vertex_subset(g, set);
  std::vector<bool> mark(static_cast<std::size_t>(g.order()), false);
  for (Vertex v : set)
    for (Vertex w : g.neighbors(v)) mark[w] = true;
  VertexSet out;
  for (Vertex v = 0; v < g.order(); ++v)
    if (mark[v]) out.push_back(v);
  return out;
}

VertexDeletion induced_subgraph(const Graph& g, std::span<const Vertex> set) {
  const VertexSet keep = make_vertex_set(g, set);
  std::vector<Vertex> new_label(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) new_label[keep[i]] = static_cast<Vertex>(i);
  VertexDeletion out{Graph(static_cast<int>(keep.size())), keep};
  for (Vertex u : keep)
    for (Vertex w : g.neighbors(u))
      if (u < w && new_label[w] >= 0) out.graph.add_edge(new_label[u], new_label[w]);
  return out;
}

VertexDeletion delete_vertices(const Graph& g, std::span<const Vertex> set) {
  require_vertex_subset(g, set);
  std::vector<bool> removed(static_cast<std::size_t>(g.order()), false);
  for (Vertex v : set) removed[v] = true;
  VertexSet keep;
  for (Vertex v = 0; v < g.order(); ++v)
    if (!removed[v]) keep.push_back(v);
  return induced_subgraph(g, keep);
}

std::optional<int> girth(const Graph& g) {
  const int n = g.order();
  std::optional<int> best;
  std::vector<int> dist(static_cast<std::size_t>(n));
  std::vector<Vertex> parent(static_cast<std::size_t>(n));
  for (Vertex root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[root] = 0;
    parent[root] = -1;
    std::queue<Vertex> queue;
    queue.push(root);
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop();
      for (Vertex w : g.neighbors(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push(w);
        } else if (w != parent[u]) {
          const int len = dist[u] + dist[w] + 1;
          if (!best || len < *best) best = len;
        }
      }
    }
  }
  return best;
}

std::optional<Bipartition> bipartition(const Graph& g) {
  std::vector<int> colour(static_cast<std::size_t>(g.order()), -1);
  Bipartition out;
  for (const VertexSet& comp : connected_components(g)) {
    const Vertex root = comp.front();
    colour[root] = 0;
    std::queue<Vertex> queue;
    queue.push(root);
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop();
      for (Vertex w : g.neighbors(u)) {
        if (colour[w] < 0) {
          colour[w] = 1 - colour[u];
          queue.push(w);
        } else if (colour[w] == colour[u]) {
          return std::nullopt;
        }
      }
    }
    VertexSet side[2];
    for (Vertex v : comp) side[colour[v]].push_back(v);
    // side[0] holds the component's smallest vertex, so it wins ties.
    const int small = side[1].size() < side[0].size() ? 1 : 0;
    out.x.insert(out.x.end(), side[small].begin(), side[small].end());
    out.y.insert(out.y.end(), side[1 - small].begin(), side[1 - small].end());
  }
  std::sort(out.x.begin(), out.x.end());
  std::sort(out.y.begin(), out.y.end());
  return out;
}

}  // namespace staruniform
