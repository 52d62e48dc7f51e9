#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>

#include "oracles.hpp"
#include "staruniform/canonical.hpp"
#include "staruniform/enumerate.hpp"
#include "staruniform/generators.hpp"

using namespace staruniform;

namespace {

Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
  Graph out(g.order());
  for (const Edge& e : g.edges()) out.add_edge(perm[e.u], perm[e.v]);
  return out;
}

}  // namespace

TEST_CASE("all labelled paths on three vertices share one form") {
  const Graph a = Graph::from_edges(3, std::vector<Edge>{{0, 1}, {1, 2}});
  const Graph b = Graph::from_edges(3, std::vector<Edge>{{0, 2}, {1, 2}});
  const Graph c = Graph::from_edges(3, std::vector<Edge>{{0, 1}, {0, 2}});
  CHECK(canonical_form(a) == canonical_form(b));
  CHECK(canonical_form(a) == canonical_form(c));
  CHECK(canonical_form(a) != canonical_form(cycle_graph(3)));
}

TEST_CASE("every relabelling of C5 has the same form") {
  const Graph c5 = cycle_graph(5);
  const CanonicalForm form = canonical_form(c5);
  std::vector<Vertex> perm(5);
  std::iota(perm.begin(), perm.end(), 0);
  int seen = 0;
  do {
    CHECK(canonical_form(relabel(c5, perm)) == form);
    ++seen;
  } while (std::next_permutation(perm.begin(), perm.end()));
  CHECK(seen == 120);
}

TEST_CASE("regular graphs that colour refinement cannot separate") {
  Graph two_triangles(6);
  two_triangles.add_edge(0, 1);
  two_triangles.add_edge(1, 2);
  two_triangles.add_edge(2, 0);
  two_triangles.add_edge(3, 4);
  two_triangles.add_edge(4, 5);
  two_triangles.add_edge(5, 3);
  CHECK_FALSE(is_isomorphic(cycle_graph(6), two_triangles));
  CHECK(is_isomorphic(cycle_graph(6), relabel(cycle_graph(6), {3, 0, 4, 1, 5, 2})));
}

TEST_CASE("canonical graph is a fixed point") {
  for (const Graph& g : isomorphism_classes(5)) {
    const CanonicalForm form = canonical_form(g);
    CHECK(canonical_graph(form) == g);
    CHECK(canonical_form(canonical_graph(form)) == form);
    CHECK(oracle::isomorphic(canonical_graph(g), g));
  }
}

TEST_CASE("forms agree with brute-force isomorphism on every labelled graph up to 6 vertices") {
  for (int n = 1; n <= 6; ++n) {
    std::map<std::uint64_t, std::uint64_t> oracle_to_form;
    std::map<std::uint64_t, std::uint64_t> form_to_oracle;
    bool consistent = true;
    enumerate_graphs(n, {}, [&](const Graph& g) {
      const std::uint64_t o = oracle::min_code(g);
      const std::uint64_t f = canonical_form(g).bits;
      const auto [it1, fresh1] = oracle_to_form.emplace(o, f);
      const auto [it2, fresh2] = form_to_oracle.emplace(f, o);
      if (it1->second != f || it2->second != o) consistent = false;
    });
    CHECK_MESSAGE(consistent, "order ", n);
    CHECK(oracle_to_form.size() == form_to_oracle.size());
  }
}

TEST_CASE("order limits") {
  CHECK_NOTHROW(canonical_form(cycle_graph(kMaxCanonicalOrder)));
  CHECK_THROWS_AS(canonical_form(cycle_graph(kMaxCanonicalOrder + 1)), GraphError);
  CHECK(canonical_form(Graph(0)) == CanonicalForm{0, 0});
}
