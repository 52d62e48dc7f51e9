#ifndef STARUNIFORM_DOMINATION_HPP
#define STARUNIFORM_DOMINATION_HPP

#include <span>

#include "staruniform/graph.hpp"

namespace staruniform {

inline constexpr int kMaxDominationOrder = 64;

struct DominatingSet {
  VertexSet vertices;
  bool minimum = false;
};

/// Every vertex is in `set` or adjacent to a member. Throws GraphError when
/// `set` is not a subset of V(g).
bool is_dominating(const Graph& g, std::span<const Vertex> set);

/// Exact minimum dominating set by branch and bound.
///
/// Branches on the lowest-index undominated vertex, trying each member of its
/// closed neighbourhood in ascending order. A greedy cover seeds the upper
/// bound; ceil(undominated / (max degree + 1)) is the lower bound. The result
/// is the first optimum met in that branch order, so it is reproducible.
/// Isolated vertices are forced into the set. Orders above
/// kMaxDominationOrder throw GraphError.
DominatingSet minimum_dominating_set(const Graph& g);

int domination_number(const Graph& g);

}  // namespace staruniform

#endif  // STARUNIFORM_DOMINATION_HPP
