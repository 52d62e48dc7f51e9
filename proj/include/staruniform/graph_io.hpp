#ifndef STARUNIFORM_GRAPH_IO_HPP
#define STARUNIFORM_GRAPH_IO_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "staruniform/graph.hpp"

namespace staruniform {

/// Malformed textual graph input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses one "u v" pair per line. Blank lines and '#' comments are skipped,
/// duplicate edges collapse. The order is one more than the largest label,
/// raised to N by a "# order N" comment such as format_edge_list writes.
Graph parse_edge_list(std::string_view text);
std::string format_edge_list(const Graph& g);

/// graph6 decoding. Accepts an optional ">>graph6<<" prefix and surrounding
/// whitespace; the payload length must match the order exactly.
Graph from_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

}  // namespace staruniform

#endif  // STARUNIFORM_GRAPH_IO_HPP
