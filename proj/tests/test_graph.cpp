#include <doctest.h>

#include <array>

#include "staruniform/generators.hpp"
#include "staruniform/graph.hpp"

using namespace staruniform;

TEST_CASE("construction and basic queries") {
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(2, 1);
  g.add_edge(1, 0);  // duplicate
  CHECK(g.order() == 4);
  CHECK(g.size() == 2);
  CHECK(g.adjacent(1, 2));
  CHECK(g.adjacent(2, 1));
  CHECK_FALSE(g.adjacent(0, 2));
  CHECK(g.degree(1) == 2);
  CHECK(g.degree(3) == 0);
  const auto nb = g.neighbors(1);
  CHECK(std::vector<Vertex>(nb.begin(), nb.end()) == std::vector<Vertex>{0, 2});
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
  CHECK(has_isolated_vertex(g));
  CHECK(min_degree(g) == 0);
  CHECK(max_degree(g) == 2);
}

TEST_CASE("add_edge rejects loops and bad labels") {
  Graph g(3);
  CHECK_THROWS_AS(g.add_edge(1, 1), GraphError);
  CHECK_THROWS_AS(g.add_edge(0, 3), GraphError);
  CHECK_THROWS_AS(g.add_edge(-1, 0), GraphError);
  CHECK_THROWS_AS(Graph(-1), GraphError);
  const std::array<Edge, 1> bad{Edge{0, 5}};
  CHECK_THROWS_AS(Graph::from_edges(3, bad), GraphError);
}

TEST_CASE("empty and single-vertex graphs") {
  const Graph empty(0);
  CHECK(empty.order() == 0);
  CHECK(is_connected(empty));
  CHECK(connected_components(empty).empty());
  CHECK_FALSE(girth(empty).has_value());
  const Graph one(1);
  CHECK(is_connected(one));
  CHECK(has_isolated_vertex(one));
}

TEST_CASE("connectivity and components") {
  Graph g(5);
  g.add_edge(0, 1);
  g.add_edge(3, 4);
  CHECK_FALSE(is_connected(g));
  const auto comps = connected_components(g);
  REQUIRE(comps.size() == 3);
  CHECK(comps[0] == VertexSet{0, 1});
  CHECK(comps[1] == VertexSet{2});
  CHECK(comps[2] == VertexSet{3, 4});
  CHECK(is_connected(cycle_graph(5)));
}

TEST_CASE("girth") {
  CHECK(girth(cycle_graph(3)) == 3);
  CHECK(girth(cycle_graph(7)) == 7);
  CHECK(girth(complete_bipartite(2, 3)) == 4);
  CHECK_FALSE(girth(path_graph(6)).has_value());
  CHECK_FALSE(girth(star_graph(4)).has_value());
  // a triangle hanging off a long cycle
  Graph g = cycle_graph(8);
  g.add_edge(0, 2);
  CHECK(girth(g) == 3);
}

TEST_CASE("bipartition puts the smaller side first") {
  const auto b = bipartition(complete_bipartite(3, 2));
  REQUIRE(b.has_value());
  CHECK(b->x == VertexSet{3, 4});
  CHECK(b->y == VertexSet{0, 1, 2});
  CHECK_FALSE(bipartition(cycle_graph(5)).has_value());

  const auto c4 = bipartition(cycle_graph(4));
  REQUIRE(c4.has_value());
  CHECK(c4->x == VertexSet{0, 2});  // tie: side holding vertex 0

  // per component: the path 0-1-2 contributes {1}, the edge 3-4 contributes {3}
  Graph g(5);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(3, 4);
  const auto mixed = bipartition(g);
  REQUIRE(mixed.has_value());
  CHECK(mixed->x == VertexSet{1, 3});
  CHECK(mixed->y == VertexSet{0, 2, 4});
}

TEST_CASE("neighbourhoods, deletion and induced subgraphs") {
  const Graph p = path_graph(5);
  const std::array<Vertex, 2> s{0, 4};
  CHECK(neighbors_of_set(p, s) == VertexSet{1, 3});

  const std::array<Vertex, 1> mid{2};
  const auto del = delete_vertices(p, mid);
  CHECK(del.graph.order() == 4);
  CHECK(del.graph.size() == 2);
  CHECK(del.original_label == std::vector<Vertex>{0, 1, 3, 4});
  CHECK_FALSE(is_connected(del.graph));

  const std::array<Vertex, 3> keep{1, 2, 3};
  const auto ind = induced_subgraph(p, keep);
  CHECK(ind.graph == path_graph(3));
  CHECK(ind.original_label == std::vector<Vertex>{1, 2, 3});
}

TEST_CASE("vertex subset contracts") {
  const Graph g = cycle_graph(4);
  const std::array<Vertex, 2> out_of_range{1, 4};
  CHECK_THROWS_AS(require_vertex_subset(g, out_of_range), GraphError);
  CHECK_THROWS_AS(delete_vertices(g, out_of_range), GraphError);
  const std::array<Vertex, 3> unsorted{3, 1, 3};
  CHECK(make_vertex_set(g, unsorted) == VertexSet{1, 3});
}
