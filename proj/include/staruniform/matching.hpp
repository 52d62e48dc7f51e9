#ifndef STARUNIFORM_MATCHING_HPP
#define STARUNIFORM_MATCHING_HPP

#include <span>
#include <vector>

#include "staruniform/graph.hpp"

namespace staruniform {

/// Set of pairwise disjoint edges, stored as a mate array over the host
/// graph's vertices (-1 for uncovered).
class Matching {
 public:
  Matching() = default;
  explicit Matching(int order) : mate_(static_cast<std::size_t>(order), -1) {}

  /// Throws GraphError if an edge is missing from g or two edges share an
  /// endpoint.
  static Matching from_edges(const Graph& g, std::span<const Edge> edges);

  int order() const { return static_cast<int>(mate_.size()); }
  int size() const;
  Vertex mate(Vertex v) const { return mate_[v]; }
  bool covers(Vertex v) const { return mate_[v] >= 0; }

  /// Edges with u < v, sorted.
  std::vector<Edge> edges() const;
  VertexSet covered() const;

  void match(Vertex u, Vertex v) {
    mate_[u] = v;
    mate_[v] = u;
  }

  bool operator==(const Matching&) const = default;

 private:
  std::vector<Vertex> mate_;
};

/// Maximum matching via Edmonds' blossom contraction, O(n^3).
///
/// Free vertices are tried as BFS roots in index order, neighbours scanned
/// ascending, so the returned matching is a function of the labelled graph.
Matching maximum_matching(const Graph& g);

int matching_number(const Graph& g);

/// True when m is a matching whose edges all belong to g.
bool is_matching_of(const Graph& g, const Matching& m);

/// Both throw GraphError when m is not a matching of g.
bool is_perfect(const Graph& g, const Matching& m);
bool is_near_perfect(const Graph& g, const Matching& m);

/// G - v has a perfect matching for every v. Checked one deletion at a time.
bool is_factor_critical(const Graph& g);

}  // namespace staruniform

#endif  // STARUNIFORM_MATCHING_HPP
