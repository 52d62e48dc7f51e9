#ifndef STARUNIFORM_GRAPH_HPP
#define STARUNIFORM_GRAPH_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace staruniform {

using Vertex = int;

/// Sorted, duplicate-free list of vertex labels.
using VertexSet = std::vector<Vertex>;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  auto operator<=>(const Edge&) const = default;
};

/// Raised for contract violations on graph arguments (bad vertex sets,
/// unsupported orders, disconnected input where connectivity is required).
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Simple undirected graph on vertices 0..n-1.
///
/// Keeps both sorted adjacency lists and a dense adjacency matrix; graphs in
/// this library are small, and most algorithms want both views.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int order);

  static Graph from_edges(int order, std::span<const Edge> edges);

  /// Adds the edge {u, v}; a repeated edge is a no-op.
  void add_edge(Vertex u, Vertex v);

  int order() const { return n_; }
  std::size_t size() const { return edge_count_; }

  bool adjacent(Vertex u, Vertex v) const {
    return matrix_[static_cast<std::size_t>(u) * n_ + v] != 0;
  }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }

  /// Edges with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && matrix_ == other.matrix_;
  }

 private:
  void check_vertex(Vertex v) const;

  int n_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::uint8_t> matrix_;
};

/// Two-colouring of a bipartite graph; X is the smaller side.
struct Bipartition {
  VertexSet x;
  VertexSet y;
};

/// Result of deleting vertices: the remaining graph relabelled 0..k-1 in
/// original order, plus original_label[new] = old.
struct VertexDeletion {
  Graph graph;
  std::vector<Vertex> original_label;
};

int min_degree(const Graph& g);
int max_degree(const Graph& g);
bool has_isolated_vertex(const Graph& g);
bool is_connected(const Graph& g);

/// Connected components, each sorted, ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);

/// N(S): vertices adjacent to some member of S (members of S included when
/// adjacent to another member).
VertexSet neighbors_of_set(const Graph& g, std::span<const Vertex> set);

VertexDeletion delete_vertices(const Graph& g, std::span<const Vertex> set);

/// Subgraph induced by `set`, relabelled like delete_vertices.
VertexDeletion induced_subgraph(const Graph& g, std::span<const Vertex> set);

/// Length of a shortest cycle, or nullopt for forests.
std::optional<int> girth(const Graph& g);

/// Two-colouring or nullopt when an odd cycle exists.
///
/// Connected graphs get the unique colouring with |X| <= |Y| (vertex 0 in X
/// on ties). For disconnected graphs each component is oriented on its own
/// so that it contributes its smaller colour class to X (the class holding
/// its smallest vertex on ties); this minimises |X| overall.
std::optional<Bipartition> bipartition(const Graph& g);

/// Throws GraphError unless every member of `set` is a vertex of g.
void require_vertex_subset(const Graph& g, std::span<const Vertex> set);

/// Sorts and dedups; throws GraphError on out-of-range members.
VertexSet make_vertex_set(const Graph& g, std::span<const Vertex> members);

}  // namespace staruniform

#endif  // STARUNIFORM_GRAPH_HPP
