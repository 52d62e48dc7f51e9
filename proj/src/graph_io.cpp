#include "staruniform/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <sstream>
#include <vector>

namespace staruniform {
namespace {

constexpr int kBias = 63;
constexpr char kLongForm = 126;
// Dense adjacency storage bounds what we are willing to parse.
constexpr std::int64_t kMaxOrder = 4096;
constexpr std::string_view kHeader = ">>graph6<<";

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

Vertex parse_label(std::string_view token, std::size_t line_no) {
  Vertex value = 0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc{} || ptr != end || value < 0)
    throw ParseError("line " + std::to_string(line_no) + ": '" + std::string(token) +
                     "' is not a nonnegative integer");
  if (value >= kMaxOrder)
    throw ParseError("line " + std::to_string(line_no) + ": label " + std::to_string(value) + " is too large");
  return value;
}

int sextet(char c) {
  if (c < kBias || c > 126) throw ParseError("graph6: byte out of range");
  return c - kBias;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::vector<Edge> edges;
  Vertex max_label = -1;
  int declared_order = 0;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      // "# order N" keeps trailing isolated vertices; any other comment is ignored
      const std::string_view comment = trim(line.substr(hash + 1));
      int n = 0;
      if (comment.starts_with("order ")) {
        const std::string_view digits = trim(comment.substr(6));
        const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
        if (ec == std::errc{} && ptr == digits.data() + digits.size() && n >= 0) {
          if (n > kMaxOrder) throw ParseError("line " + std::to_string(line_no) + ": order " + std::string(digits) + " is too large");
          declared_order = std::max(declared_order, n);
        }
      }
      line = line.substr(0, hash);
    }

    std::vector<std::string_view> tokens;
    std::size_t pos = 0;
    while (pos < line.size()) {
      pos = line.find_first_not_of(" \t\r", pos);
      if (pos == std::string_view::npos) break;
      const auto stop = std::min(line.find_first_of(" \t\r", pos), line.size());
      tokens.push_back(line.substr(pos, stop - pos));
      pos = stop;
    }
    if (tokens.empty()) continue;
    if (tokens.size() != 2)
      throw ParseError("line " + std::to_string(line_no) + ": expected two vertex labels");
    const Vertex u = parse_label(tokens[0], line_no);
    const Vertex v = parse_label(tokens[1], line_no);
    if (u == v) throw ParseError("line " + std::to_string(line_no) + ": self-loop at " + std::to_string(u));
    edges.push_back({u, v});
    max_label = std::max({max_label, u, v});
  }
  return Graph::from_edges(std::max(max_label + 1, declared_order), edges);
}

std::string format_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "# order " << g.order() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

Graph from_graph6(std::string_view text) {
  text = trim(text);
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  if (text.empty()) throw ParseError("graph6: empty input");

  std::size_t pos = 0;
  std::int64_t n = 0;
  if (text[0] != kLongForm) {
    n = sextet(text[0]);
    pos = 1;
  } else {
    std::size_t digits = 3;
    pos = 1;
    if (text.size() > 1 && text[1] == kLongForm) {
      digits = 6;
      pos = 2;
    }
    if (text.size() < pos + digits) throw ParseError("graph6: truncated order header");
    for (std::size_t i = 0; i < digits; ++i) n = (n << 6) | sextet(text[pos++]);
  }
  if (n > kMaxOrder) throw ParseError("graph6: order " + std::to_string(n) + " is too large");

  const std::int64_t bits = n * (n - 1) / 2;
  const std::size_t payload = static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() - pos < payload) throw ParseError("graph6: truncated adjacency payload");
  if (text.size() - pos > payload) throw ParseError("graph6: trailing bytes after payload");

  Graph g(static_cast<int>(n));
  std::int64_t k = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int byte = sextet(text[pos + static_cast<std::size_t>(k / 6)]);
      if (byte & (1 << (5 - k % 6))) g.add_edge(i, j);
    }
  return g;
}

std::string to_graph6(const Graph& g) {
  const std::int64_t n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back(kLongForm);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  } else {
    out.append(2, kLongForm);
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  }
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

}  // namespace staruniform
