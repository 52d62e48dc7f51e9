#include "staruniform/uniformity.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "staruniform/canonical.hpp"
#include "staruniform/domination.hpp"
#include "staruniform/enumerate.hpp"
#include "staruniform/matching.hpp"

namespace staruniform {
namespace {

void require_connected_nontrivial(const Graph& g) {
  if (g.order() < 2) throw GraphError("star-uniformity needs a graph with at least two vertices");
  if (!is_connected(g)) throw GraphError("star-uniformity is only decided for connected graphs");
}

std::pair<int, int> extreme_counts(const Graph& g) { return {domination_number(g), matching_number(g)}; }

}  // namespace

bool is_star_uniform(const Graph& g) {
  require_connected_nontrivial(g);
  return matching_number(g) == domination_number(g);
}

std::string_view to_string(UniformityReason reason) {
  switch (reason) {
    case UniformityReason::kFigure2Catalog: return "FIGURE2_CATALOG";
    case UniformityReason::kBipartiteGirth4GammaX: return "BIPARTITE_G4_GAMMA_X";
    case UniformityReason::kFourCycle: return "FOUR_CYCLE";
    case UniformityReason::kNotUniform: return "NOT_UNIFORM";
    case UniformityReason::kOutOfScopeMinDegree: return "OUT_OF_SCOPE_MIN_DEGREE";
  }
  return "NOT_UNIFORM";
}

const std::vector<Graph>& derive_figure2_catalog() {
  static const std::vector<Graph> catalog = [] {
    std::vector<Graph> out;
    for (int n : {3, 5, 7}) {
      const auto members = isomorphism_classes(n, [n](const Graph& g) {
        return min_degree(g) >= 2 && is_connected(g) && is_factor_critical(g) && domination_number(g) == n / 2;
      });
      out.insert(out.end(), members.begin(), members.end());
    }
    return out;
  }();
  return catalog;
}

const std::vector<Graph>& figure2_catalog() {
  const auto& catalog = derive_figure2_catalog();
  if (catalog.size() != kFigure2CatalogSize)
    throw std::logic_error("catalog derivation found " + std::to_string(catalog.size()) + " graphs, expected " +
                           std::to_string(kFigure2CatalogSize));
  return catalog;
}

bool in_figure2_catalog(const Graph& g) {
  if (g.order() != 3 && g.order() != 5 && g.order() != 7) return false;
  const CanonicalForm form = canonical_form(g);
  const auto& catalog = figure2_catalog();
  return std::any_of(catalog.begin(), catalog.end(),
                     [&](const Graph& member) { return canonical_form(member) == form; });
}

UniformityVerdict recognize_min_deg2(const Graph& g) {
  require_connected_nontrivial(g);
  if (min_degree(g) < 2) {
    const auto [gamma, nu] = extreme_counts(g);
    if (gamma == nu) return {true, UniformityReason::kOutOfScopeMinDegree, std::nullopt};
    return {false, UniformityReason::kOutOfScopeMinDegree, std::pair{gamma, nu}};
  }
  if (const auto sides = bipartition(g)) {
    if (girth(g) == 4 && domination_number(g) == static_cast<int>(sides->x.size()))
      return {true, UniformityReason::kBipartiteGirth4GammaX, std::nullopt};
  } else if (in_figure2_catalog(g)) {
    return {true, UniformityReason::kFigure2Catalog, std::nullopt};
  }
  return {false, UniformityReason::kNotUniform, extreme_counts(g)};
}

}  // namespace staruniform
