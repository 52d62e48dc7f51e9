#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "staruniform/enumerate.hpp"
#include "staruniform/generators.hpp"
#include "staruniform/graph_io.hpp"
#include "staruniform/matching.hpp"
#include "staruniform/star_factor.hpp"
#include "staruniform/uniformity.hpp"

using namespace staruniform;

namespace {

// The nine catalog graphs as encoded by an independent implementation, one
// arbitrary labelling each.
const std::vector<std::string> kFrozenCatalog{
    "Bw", "Dhc", "Dlc", "D]w", "FhCKG", "Fh_gg", "FhYGo", "FlgGg", "FHVf?",
};

}  // namespace

TEST_CASE("four-cycle and triangle") {
  const UniformityVerdict c4 = recognize_min_deg2(cycle_graph(4));
  CHECK(c4.uniform);
  CHECK(c4.reason == UniformityReason::kBipartiteGirth4GammaX);
  CHECK_FALSE(c4.witness.has_value());

  const UniformityVerdict c3 = recognize_min_deg2(cycle_graph(3));
  CHECK(c3.uniform);
  CHECK(c3.reason == UniformityReason::kFigure2Catalog);
}

TEST_CASE("six-cycle is not uniform") {
  CHECK_FALSE(is_star_uniform(cycle_graph(6)));
  const UniformityVerdict v = recognize_min_deg2(cycle_graph(6));
  CHECK_FALSE(v.uniform);
  CHECK(v.reason == UniformityReason::kNotUniform);
  REQUIRE(v.witness.has_value());
  CHECK(*v.witness == std::pair{2, 3});
}

TEST_CASE("K22 chains are uniform through the bipartite clause") {
  for (int k = 1; k <= 5; ++k) {
    const UniformityVerdict v = recognize_min_deg2(k22_block_chain(k));
    CHECK(v.uniform);
    CHECK(v.reason == UniformityReason::kBipartiteGirth4GammaX);
    CHECK(is_star_uniform(k22_block_chain(k)));
  }
}

TEST_CASE("graphs with a degree-one vertex are out of scope but still answered") {
  const UniformityVerdict p4 = recognize_min_deg2(path_graph(4));
  CHECK(p4.reason == UniformityReason::kOutOfScopeMinDegree);
  CHECK(p4.uniform);
  const UniformityVerdict p6 = recognize_min_deg2(path_graph(6));
  CHECK(p6.reason == UniformityReason::kOutOfScopeMinDegree);
  CHECK_FALSE(p6.uniform);
  CHECK(*p6.witness == std::pair{2, 3});
  CHECK(recognize_min_deg2(star_graph(5)).uniform);
}

TEST_CASE("contract errors") {
  Graph two_edges(4);
  two_edges.add_edge(0, 1);
  two_edges.add_edge(2, 3);
  CHECK_THROWS_AS(is_star_uniform(two_edges), GraphError);
  CHECK_THROWS_AS(recognize_min_deg2(two_edges), GraphError);
  CHECK_THROWS_AS(is_star_uniform(Graph(1)), GraphError);
  CHECK_THROWS_AS(is_star_uniform(Graph(0)), GraphError);
}

TEST_CASE("catalog matches the frozen independent list") {
  const auto& catalog = figure2_catalog();
  REQUIRE(catalog.size() == kFigure2CatalogSize);
  std::vector<bool> used(kFrozenCatalog.size(), false);
  for (const Graph& g : catalog) {
    int hits = 0;
    for (std::size_t i = 0; i < kFrozenCatalog.size(); ++i)
      if (oracle::isomorphic(g, from_graph6(kFrozenCatalog[i]))) {
        ++hits;
        used[i] = true;
      }
    CHECK_MESSAGE(hits == 1, to_graph6(g));
  }
  CHECK(std::all_of(used.begin(), used.end(), [](bool b) { return b; }));
}

TEST_CASE("catalog members have one component count") {
  for (const Graph& g : figure2_catalog()) {
    CHECK(enumerate_component_counts(g).size() == 1);
    CHECK(is_factor_critical(g));
    CHECK(min_degree(g) >= 2);
    CHECK(in_figure2_catalog(g));
  }
  CHECK(in_figure2_catalog(cycle_graph(7)));
  CHECK_FALSE(in_figure2_catalog(cycle_graph(9)));
  CHECK_FALSE(in_figure2_catalog(complete_graph(5)));
  CHECK_FALSE(in_figure2_catalog(cycle_graph(4)));
}

TEST_CASE("recogniser agrees with the definition on every min-degree-2 class up to 7 vertices") {
  for (int n = 3; n <= 7; ++n) {
    bool ok = true;
    for (const Graph& g : isomorphism_classes(n, [](const Graph& h) { return is_connected(h) && min_degree(h) >= 2; })) {
      const auto counts = enumerate_component_counts(g);
      ok = ok && recognize_min_deg2(g).uniform == (counts.size() == 1) && is_star_uniform(g) == (counts.size() == 1);
    }
    CHECK_MESSAGE(ok, "order ", n);
  }
}

TEST_CASE("reason names") {
  CHECK(to_string(UniformityReason::kFigure2Catalog) == "FIGURE2_CATALOG");
  CHECK(to_string(UniformityReason::kBipartiteGirth4GammaX) == "BIPARTITE_G4_GAMMA_X");
  CHECK(to_string(UniformityReason::kNotUniform) == "NOT_UNIFORM");
  CHECK(to_string(UniformityReason::kOutOfScopeMinDegree) == "OUT_OF_SCOPE_MIN_DEGREE");
}
