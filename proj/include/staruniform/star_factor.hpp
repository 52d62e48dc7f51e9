#ifndef STARUNIFORM_STAR_FACTOR_HPP
#define STARUNIFORM_STAR_FACTOR_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "staruniform/graph.hpp"

namespace staruniform {

inline constexpr int kDefaultOracleCap = 14;
inline constexpr int kMaxOracleOrder = 63;
inline constexpr int kMaxStreamOrder = 8;

/// K_{1,k}, k >= 1. For K_{1,1} the centre is the lower-index endpoint.
struct Star {
  Vertex center = 0;
  VertexSet leaves;

  bool operator==(const Star&) const = default;
};

/// Stars partitioning the vertices of a host graph of order `order`,
/// listed by ascending centre.
struct StarFactor {
  int order = 0;
  std::vector<Star> stars;

  int component_count() const { return static_cast<int>(stars.size()); }
  bool operator==(const StarFactor&) const = default;
};

/// Sorts leaves and stars and moves K_{1,1} centres to the lower endpoint.
StarFactor canonicalize(StarFactor factor);

/// Describes the first violated property, or nullopt for a valid star-factor
/// of g: stars partition V(g), each centre is adjacent to all its leaves,
/// leaves are nonempty and K_{1,1} centres are canonical.
std::optional<std::string> star_factor_violation(const Graph& g, const StarFactor& factor);
bool is_star_factor(const Graph& g, const StarFactor& factor);

/// Star-factor with matching_number(g) components.
///
/// The maximum matching supplies K_{1,1} stars; each uncovered vertex, in
/// index order, joins the star of its lowest-index covered neighbour, which
/// becomes that star's centre. Throws GraphError if g has an isolated vertex.
StarFactor max_component_star_factor(const Graph& g);

/// Star-factor with domination_number(g) components, built inside the
/// bipartite graph of edges between a minimum dominating set and the rest.
/// Throws GraphError on disconnected input or an isolated vertex.
StarFactor min_component_star_factor(const Graph& g);

/// All achievable component counts over every star-factor of g, ascending.
/// Exact search over the uncovered-vertex set, memoised on that set.
/// Throws GraphError for an isolated vertex or when g.order() > cap.
std::vector<int> enumerate_component_counts(const Graph& g, int cap = kDefaultOracleCap);

/// Streams every star-factor of g exactly once (canonical form). Debug aid,
/// limited to kMaxStreamOrder vertices.
void for_each_star_factor(const Graph& g, const std::function<void(const StarFactor&)>& visit);

}  // namespace staruniform

#endif  // STARUNIFORM_STAR_FACTOR_HPP
