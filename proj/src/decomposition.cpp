#include "staruniform/decomposition.hpp"

#include <algorithm>
#include <set>

#include "staruniform/matching.hpp"

namespace staruniform {
namespace {

enum class Part { kD, kA, kC };

std::vector<Part> part_of(const Graph& g, const GEDecomposition& dec) {
  std::vector<int> hits(static_cast<std::size_t>(g.order()), 0);
  std::vector<Part> part(static_cast<std::size_t>(g.order()), Part::kC);
  const auto mark = [&](const VertexSet& set, Part p) {
    require_vertex_subset(g, set);
    for (Vertex v : set) {
      ++hits[v];
      part[v] = p;
    }
  };
  mark(dec.d, Part::kD);
  mark(dec.a, Part::kA);
  mark(dec.c, Part::kC);
  if (std::any_of(hits.begin(), hits.end(), [](int h) { return h != 1; }))
    throw GraphError("D, A, C do not partition the vertex set");
  return part;
}

ClauseStatus status(bool ok) { return ok ? ClauseStatus::kPass : ClauseStatus::kFail; }

}  // namespace

GEDecomposition decompose(const Graph& g) {
  const int nu = matching_number(g);
  GEDecomposition out;
  std::vector<bool> in_d(static_cast<std::size_t>(g.order()), false);
  for (Vertex v = 0; v < g.order(); ++v) {
    const Vertex removed[] = {v};
    if (matching_number(delete_vertices(g, removed).graph) == nu) {
      in_d[v] = true;
      out.d.push_back(v);
    }
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    if (in_d[v]) continue;
    const auto nbrs = g.neighbors(v);
    if (std::any_of(nbrs.begin(), nbrs.end(), [&](Vertex w) { return in_d[w]; }))
      out.a.push_back(v);
    else
      out.c.push_back(v);
  }
  return out;
}

std::string_view to_string(ClauseStatus s) {
  switch (s) {
    case ClauseStatus::kPass: return "pass";
    case ClauseStatus::kFail: return "fail";
    case ClauseStatus::kSkipped: return "skipped";
  }
  return "fail";
}

bool StructureReport::all_hold() const {
  for (ClauseStatus s : {d_components_factor_critical, c_has_perfect_matching, a_smaller_than_d_components,
                         matching_respects_partition})
    if (s == ClauseStatus::kFail) return false;
  return true;
}

StructureReport verify_structure(const Graph& g, const GEDecomposition& dec) {
  const std::vector<Part> part = part_of(g, dec);
  StructureReport report;

  const VertexDeletion d_graph = induced_subgraph(g, dec.d);
  const std::vector<VertexSet> d_local = connected_components(d_graph.graph);
  std::vector<int> d_component(static_cast<std::size_t>(g.order()), -1);
  std::vector<int> d_size(d_local.size(), 0);
  bool factor_critical = true;
  for (std::size_t k = 0; k < d_local.size(); ++k) {
    for (Vertex local : d_local[k]) d_component[d_graph.original_label[local]] = static_cast<int>(k);
    d_size[k] = static_cast<int>(d_local[k].size());
    factor_critical = factor_critical && is_factor_critical(induced_subgraph(d_graph.graph, d_local[k]).graph);
  }
  report.d_components_factor_critical = status(factor_critical);

  const Graph c_graph = induced_subgraph(g, dec.c).graph;
  report.c_has_perfect_matching = status(2 * matching_number(c_graph) == c_graph.order());

  report.a_smaller_than_d_components =
      dec.d.empty() ? ClauseStatus::kSkipped : status(dec.a.size() < d_local.size());

  const Matching m = maximum_matching(g);
  std::vector<int> inside_d(d_local.size(), 0);
  int inside_c = 0;
  std::set<int> reached_from_a;
  bool shape_ok = true;
  for (const Edge& e : m.edges()) {
    const Part pu = part[e.u], pv = part[e.v];
    if (pu == Part::kD && pv == Part::kD && d_component[e.u] == d_component[e.v]) {
      ++inside_d[d_component[e.u]];
    } else if (pu == Part::kC && pv == Part::kC) {
      ++inside_c;
    } else if ((pu == Part::kA && pv == Part::kD) || (pu == Part::kD && pv == Part::kA)) {
      const Vertex d_end = pu == Part::kD ? e.u : e.v;
      shape_ok = shape_ok && reached_from_a.insert(d_component[d_end]).second;
    } else {
      shape_ok = false;
    }
  }
  for (std::size_t k = 0; k < d_local.size(); ++k) shape_ok = shape_ok && 2 * inside_d[k] == d_size[k] - 1;
  shape_ok = shape_ok && 2 * inside_c == static_cast<int>(dec.c.size());
  shape_ok = shape_ok && reached_from_a.size() == dec.a.size();
  report.matching_respects_partition = status(shape_ok);
  return report;
}

}  // namespace staruniform
