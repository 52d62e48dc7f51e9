#ifndef STARUNIFORM_DECOMPOSITION_HPP
#define STARUNIFORM_DECOMPOSITION_HPP

#include <string>
#include <string_view>

#include "staruniform/graph.hpp"

namespace staruniform {

/// Gallai-Edmonds partition. D: vertices missed by some maximum matching.
/// A: vertices outside D with a neighbour in D. C: everything else.
struct GEDecomposition {
  VertexSet d;
  VertexSet a;
  VertexSet c;

  bool operator==(const GEDecomposition&) const = default;
};

/// v is in D exactly when deleting v leaves the matching number unchanged.
/// Costs n + 1 matching runs.
GEDecomposition decompose(const Graph& g);

enum class ClauseStatus { kPass, kFail, kSkipped };

std::string_view to_string(ClauseStatus status);

/// One entry per structural clause of the decomposition theorem.
struct StructureReport {
  ClauseStatus d_components_factor_critical = ClauseStatus::kFail;  // (a)
  ClauseStatus c_has_perfect_matching = ClauseStatus::kFail;        // (b)
  ClauseStatus a_smaller_than_d_components = ClauseStatus::kFail;   // (c), skipped when D is empty
  ClauseStatus matching_respects_partition = ClauseStatus::kFail;   // (d)

  bool all_hold() const;
};

/// Checks the clauses against `dec`. Clause (d) is tested on the matching
/// returned by maximum_matching(g): near-perfect on every D-component,
/// perfect on C, and every A vertex matched into its own D-component.
/// Throws GraphError if dec does not partition V(g).
StructureReport verify_structure(const Graph& g, const GEDecomposition& dec);

}  // namespace staruniform

#endif  // STARUNIFORM_DECOMPOSITION_HPP
