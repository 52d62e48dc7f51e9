#include "staruniform/matching.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace staruniform {
namespace {

class Blossom {
 public:
  explicit Blossom(const Graph& g)
      : g_(g),
        n_(static_cast<std::size_t>(g.order())),
        match_(g.order()),
        parent_(n_),
        base_(n_),
        used_(n_),
        in_blossom_(n_) {}

  Matching run() {
    for (Vertex root = 0; root < g_.order(); ++root) {
      if (match_.covers(root)) continue;
      Vertex end = find_augmenting_path(root);
      // Flip the alternating path ending at `end`.
      while (end >= 0) {
        const Vertex prev = parent_[end];
        const Vertex next = match_.covers(prev) ? match_.mate(prev) : -1;
        match_.match(end, prev);
        end = next;
      }
    }
    return match_;
  }

 private:
  Vertex lowest_common_base(Vertex a, Vertex b) {
    std::vector<bool> seen(n_, false);
    while (true) {
      a = base_[a];
      seen[a] = true;
      if (!match_.covers(a)) break;
      a = parent_[match_.mate(a)];
    }
    while (true) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[match_.mate(b)];
    }
  }

  void mark_path(Vertex v, Vertex b, Vertex child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = true;
      in_blossom_[base_[match_.mate(v)]] = true;
      parent_[v] = child;
      child = match_.mate(v);
      v = parent_[match_.mate(v)];
    }
  }

  // Returns the free vertex ending an augmenting path from root, or -1.
  Vertex find_augmenting_path(Vertex root) {
    std::fill(used_.begin(), used_.end(), false);
    std::fill(parent_.begin(), parent_.end(), -1);
    for (std::size_t i = 0; i < n_; ++i) base_[i] = static_cast<Vertex>(i);

    used_[root] = true;
    std::queue<Vertex> queue;
    queue.push(root);
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop();
      for (Vertex to : g_.neighbors(v)) {
        if (base_[v] == base_[to] || match_.mate(v) == to) continue;
        if (to == root || (match_.covers(to) && parent_[match_.mate(to)] >= 0)) {
          const Vertex b = lowest_common_base(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), false);
          mark_path(v, b, to);
          mark_path(to, b, v);
          for (std::size_t i = 0; i < n_; ++i) {
            if (!in_blossom_[base_[i]]) continue;
            base_[i] = b;
            if (!used_[i]) {
              used_[i] = true;
              queue.push(static_cast<Vertex>(i));
            }
          }
        } else if (parent_[to] < 0) {
          parent_[to] = v;
          if (!match_.covers(to)) return to;
          const Vertex next = match_.mate(to);
          used_[next] = true;
          queue.push(next);
        }
      }
    }
    return -1;
  }

  const Graph& g_;
  std::size_t n_;
  Matching match_;
  std::vector<Vertex> parent_;
  std::vector<Vertex> base_;
  std::vector<bool> used_;
  std::vector<bool> in_blossom_;
};

void require_matching_of(const Graph& g, const Matching& m) {
  if (!is_matching_of(g, m)) throw GraphError("not a matching of this graph");
}

}  // namespace

Matching Matching::from_edges(const Graph& g, std::span<const Edge> edges) {
  Matching m(g.order());
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= g.order() || e.v >= g.order() || !g.adjacent(e.u, e.v))
      throw GraphError("matching edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " is not in the graph");
    if (m.covers(e.u) || m.covers(e.v))
      throw GraphError("matching edges share an endpoint at edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
    m.match(e.u, e.v);
  }
  return m;
}

int Matching::size() const {
  int covered = 0;
  for (Vertex v : mate_)
    if (v >= 0) ++covered;
  return covered / 2;
}

std::vector<Edge> Matching::edges() const {
  std::vector<Edge> out;
  for (Vertex v = 0; v < order(); ++v)
    if (mate_[v] > v) out.push_back({v, mate_[v]});
  return out;
}

VertexSet Matching::covered() const {
  VertexSet out;
  for (Vertex v = 0; v < order(); ++v)
    if (mate_[v] >= 0) out.push_back(v);
  return out;
}

Matching maximum_matching(const Graph& g) { return Blossom(g).run(); }

int matching_number(const Graph& g) { return maximum_matching(g).size(); }

bool is_matching_of(const Graph& g, const Matching& m) {
  if (m.order() != g.order()) return false;
  for (Vertex v = 0; v < g.order(); ++v) {
    const Vertex w = m.mate(v);
    if (w < 0) continue;
    if (w >= g.order() || m.mate(w) != v || !g.adjacent(v, w)) return false;
  }
  return true;
}

bool is_perfect(const Graph& g, const Matching& m) {
  require_matching_of(g, m);
  return 2 * m.size() == g.order();
}

bool is_near_perfect(const Graph& g, const Matching& m) {
  require_matching_of(g, m);
  return 2 * m.size() == g.order() - 1;
}

bool is_factor_critical(const Graph& g) {
  const int n = g.order();
  if (n % 2 == 0) return false;
  for (Vertex v = 0; v < n; ++v) {
    const Vertex removed[] = {v};
    if (matching_number(delete_vertices(g, removed).graph) != (n - 1) / 2) return false;
  }
  return true;
}

}  // namespace staruniform
