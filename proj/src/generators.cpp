#include "staruniform/generators.hpp"

#include <charconv>
#include <string>
#include <vector>

namespace staruniform {
namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw GraphError(what);
}

std::vector<int> parse_params(std::string_view text, std::string_view spec) {
  std::vector<int> out;
  while (true) {
    const auto comma = text.find(',');
    const std::string_view token = text.substr(0, comma);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    require(!token.empty() && ec == std::errc{} && ptr == token.data() + token.size(),
            "bad parameter in family spec '" + std::string(spec) + "'");
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace

Graph cycle_graph(int n) {
  require(n >= 3, "cycle needs at least 3 vertices");
  Graph g(n);
  for (Vertex v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph path_graph(int n) {
  require(n >= 1, "path needs at least 1 vertex");
  Graph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph star_graph(int leaves) {
  require(leaves >= 1, "star needs at least 1 leaf");
  Graph g(leaves + 1);
  for (Vertex v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

Graph complete_bipartite(int m, int n) {
  require(m >= 1 && n >= 1, "complete bipartite parts must be nonempty");
  Graph g(m + n);
  for (Vertex u = 0; u < m; ++u)
    for (Vertex v = m; v < m + n; ++v) g.add_edge(u, v);
  return g;
}

Graph complete_graph(int n) {
  require(n >= 1, "complete graph needs at least 1 vertex");
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph k22_block_chain(int k) {
  require(k >= 1, "k22 chain needs at least 1 block");
  Graph g(3 * k + 1);
  for (int i = 0; i < k; ++i) {
    const Vertex s = 3 * i, x = s + 1, y = s + 2, t = s + 3;
    g.add_edge(s, x);
    g.add_edge(s, y);
    g.add_edge(x, t);
    g.add_edge(y, t);
  }
  return g;
}

Graph generate_family(std::string_view spec) {
  const auto colon = spec.find(':');
  require(colon != std::string_view::npos, "family spec '" + std::string(spec) + "' needs name:params");
  const std::string_view name = spec.substr(0, colon);
  const std::vector<int> p = parse_params(spec.substr(colon + 1), spec);
  const auto arity = [&](std::size_t k) {
    require(p.size() == k, "family '" + std::string(name) + "' takes " + std::to_string(k) + " parameter(s)");
  };
  if (name == "cycle") {
    arity(1);
    return cycle_graph(p[0]);
  }
  if (name == "path") {
    arity(1);
    return path_graph(p[0]);
  }
  if (name == "star") {
    arity(1);
    return star_graph(p[0]);
  }
  if (name == "kbip") {
    arity(2);
    return complete_bipartite(p[0], p[1]);
  }
  if (name == "k22chain") {
    arity(1);
    return k22_block_chain(p[0]);
  }
  if (name == "complete") {
    arity(1);
    return complete_graph(p[0]);
  }
  throw GraphError("unknown graph family '" + std::string(name) + "'");
}

}  // namespace staruniform
