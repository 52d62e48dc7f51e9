#ifndef STARUNIFORM_UNIFORMITY_HPP
#define STARUNIFORM_UNIFORMITY_HPP

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "staruniform/graph.hpp"

namespace staruniform {

inline constexpr std::size_t kFigure2CatalogSize = 9;

/// A connected graph without isolated vertices is star-uniform exactly when
/// its matching number equals its domination number. Throws GraphError on
/// disconnected input or a graph with fewer than two vertices.
bool is_star_uniform(const Graph& g);

enum class UniformityReason {
  kFigure2Catalog,
  kBipartiteGirth4GammaX,
  kFourCycle,  // reserved; C4 is reported under kBipartiteGirth4GammaX
  kNotUniform,
  kOutOfScopeMinDegree,
};

std::string_view to_string(UniformityReason reason);

struct UniformityVerdict {
  bool uniform = false;
  UniformityReason reason = UniformityReason::kNotUniform;
  /// (domination number, matching number) for non-uniform verdicts: the
  /// smallest and largest achievable component counts.
  std::optional<std::pair<int, int>> witness;
};

/// Factor-critical connected graphs of order 3, 5 or 7 with minimum degree
/// at least two and domination number floor(n/2), one per isomorphism class
/// in canonical labelling, ordered by order and canonical form. Derived by
/// exhaustive enumeration on first use and cached.
const std::vector<Graph>& derive_figure2_catalog();

/// derive_figure2_catalog(), but throws std::logic_error unless it has
/// exactly kFigure2CatalogSize members.
const std::vector<Graph>& figure2_catalog();

bool in_figure2_catalog(const Graph& g);

/// Structural decision for connected graphs with minimum degree >= 2:
/// uniform iff g is a catalog graph, or bipartite with girth 4 and domination
/// number |X| where X is the smaller side. Graphs with a vertex of degree < 2
/// get kOutOfScopeMinDegree with the answer of is_star_uniform. Throws
/// GraphError on disconnected input.
UniformityVerdict recognize_min_deg2(const Graph& g);

}  // namespace staruniform

#endif  // STARUNIFORM_UNIFORMITY_HPP
