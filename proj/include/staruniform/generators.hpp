#ifndef STARUNIFORM_GENERATORS_HPP
#define STARUNIFORM_GENERATORS_HPP

#include <string_view>

#include "staruniform/graph.hpp"

namespace staruniform {

Graph cycle_graph(int n);           // n >= 3
Graph path_graph(int n);            // n >= 1 vertices
Graph star_graph(int leaves);       // K_{1,leaves}, centre 0
Graph complete_bipartite(int m, int n);  // parts 0..m-1 and m..m+n-1
Graph complete_graph(int n);

/// Chain of k copies of K_{2,2}, consecutive blocks glued at one vertex.
///
/// Block i (0-based) uses s = 3i, x = 3i+1, y = 3i+2, t = 3i+3 with edges
/// s-x, s-y, x-t, y-t; t is the s of block i+1. The glued vertices of a block
/// are opposite each other, so x and y stay a nonadjacent pair of degree two.
/// 3k+1 vertices, 4k edges.
Graph k22_block_chain(int k);

/// Parses "cycle:n", "path:n", "star:n", "kbip:m,n", "k22chain:k",
/// "complete:n". Throws GraphError on an unknown family or bad parameters.
Graph generate_family(std::string_view spec);

}  // namespace staruniform

#endif  // STARUNIFORM_GENERATORS_HPP
