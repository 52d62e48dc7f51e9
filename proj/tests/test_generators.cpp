#include <doctest.h>

#include "oracles.hpp"
#include "staruniform/generators.hpp"

using namespace staruniform;

TEST_CASE("standard families") {
  CHECK(cycle_graph(5).size() == 5);
  CHECK(min_degree(cycle_graph(5)) == 2);
  CHECK(path_graph(1).size() == 0);
  CHECK(path_graph(4).size() == 3);
  CHECK(star_graph(4).degree(0) == 4);
  CHECK(complete_graph(5).size() == 10);
  CHECK(complete_bipartite(2, 3).size() == 6);
  CHECK_THROWS_AS(cycle_graph(2), GraphError);
  CHECK_THROWS_AS(path_graph(0), GraphError);
  CHECK_THROWS_AS(star_graph(0), GraphError);
  CHECK_THROWS_AS(k22_block_chain(0), GraphError);
}

TEST_CASE("K22 block chain shape") {
  for (int k = 1; k <= 5; ++k) {
    const Graph g = k22_block_chain(k);
    CHECK(g.order() == 3 * k + 1);
    CHECK(g.size() == static_cast<std::size_t>(4 * k));
    CHECK(is_connected(g));
    CHECK(min_degree(g) == 2);
    CHECK(girth(g) == 4);
    CHECK(bipartition(g).has_value());
  }
}

TEST_CASE("K22 block chain cut vertices are the glue vertices") {
  // two blocks on 7 vertices: only the shared vertex 3 separates the graph
  const Graph g = k22_block_chain(2);
  CHECK(g.order() == 7);
  CHECK(oracle::cut_vertices(g) == std::vector<Vertex>{3});
  CHECK(oracle::cut_vertices(k22_block_chain(3)) == std::vector<Vertex>{3, 6});
  CHECK(oracle::cut_vertices(k22_block_chain(1)).empty());
}

TEST_CASE("family specs") {
  CHECK(generate_family("cycle:4") == cycle_graph(4));
  CHECK(generate_family("path:3") == path_graph(3));
  CHECK(generate_family("star:3") == star_graph(3));
  CHECK(generate_family("kbip:2,3") == complete_bipartite(2, 3));
  CHECK(generate_family("k22chain:3") == k22_block_chain(3));
  CHECK(generate_family("complete:4") == complete_graph(4));
  CHECK_THROWS_AS(generate_family("wheel:5"), GraphError);
  CHECK_THROWS_AS(generate_family("cycle"), GraphError);
  CHECK_THROWS_AS(generate_family("cycle:x"), GraphError);
  CHECK_THROWS_AS(generate_family("cycle:2"), GraphError);
  CHECK_THROWS_AS(generate_family("kbip:2"), GraphError);
  CHECK_THROWS_AS(generate_family("k22chain:-1"), GraphError);
}
