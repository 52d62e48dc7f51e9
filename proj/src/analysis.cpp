#include "staruniform/analysis.hpp"

#include <sstream>

#include "staruniform/decomposition.hpp"
#include "staruniform/domination.hpp"
#include "staruniform/graph_io.hpp"
#include "staruniform/matching.hpp"

namespace staruniform {

AnalysisReport analyze(const Graph& g, int oracle_cap) {
  AnalysisReport r;
  r.graph6 = to_graph6(g);
  r.order = g.order();
  r.size = g.size();
  r.min_degree = min_degree(g);
  r.connected = is_connected(g);
  r.girth = girth(g);
  if (const auto sides = bipartition(g))
    r.bipartition_sizes = std::pair{static_cast<int>(sides->x.size()), static_cast<int>(sides->y.size())};
  r.matching_number = matching_number(g);
  r.domination_number = domination_number(g);
  const GEDecomposition dec = decompose(g);
  r.ge_d = static_cast<int>(dec.d.size());
  r.ge_a = static_cast<int>(dec.a.size());
  r.ge_c = static_cast<int>(dec.c.size());

  const bool isolated = has_isolated_vertex(g);
  if (g.order() < 2) {
    r.inapplicable = "fewer than two vertices";
  } else if (!r.connected) {
    r.inapplicable = "graph is disconnected";
  } else {
    r.star_uniform = r.matching_number == r.domination_number;
    r.verdict = recognize_min_deg2(g);
    r.min_factor = min_component_star_factor(g);
  }
  if (!isolated) {
    r.max_factor = max_component_star_factor(g);
    if (g.order() <= oracle_cap) r.component_counts = enumerate_component_counts(g, oracle_cap);
  }
  return r;
}

nlohmann::ordered_json to_json(const StarFactor& factor) {
  nlohmann::ordered_json stars = nlohmann::ordered_json::array();
  for (const Star& s : factor.stars) stars.push_back({{"center", s.center}, {"leaves", s.leaves}});
  return {{"components", factor.component_count()}, {"stars", std::move(stars)}};
}

nlohmann::ordered_json to_json(const AnalysisReport& r) {
  using json = nlohmann::ordered_json;
  json out;
  out["graph6"] = r.graph6;
  out["order"] = r.order;
  out["size"] = r.size;
  out["min_degree"] = r.min_degree;
  out["connected"] = r.connected;
  out["girth"] = r.girth ? json(*r.girth) : json(nullptr);
  out["bipartition"] =
      r.bipartition_sizes ? json{{"x", r.bipartition_sizes->first}, {"y", r.bipartition_sizes->second}} : json(nullptr);
  out["matching_number"] = r.matching_number;
  out["domination_number"] = r.domination_number;
  out["ge_partition"] = {{"d", r.ge_d}, {"a", r.ge_a}, {"c", r.ge_c}};
  if (r.star_uniform) {
    json su{{"applicable", true}, {"uniform", *r.star_uniform}, {"reason", to_string(r.verdict->reason)}};
    su["witness"] = r.verdict->witness ? json::array({r.verdict->witness->first, r.verdict->witness->second})
                                       : json(nullptr);
    out["star_uniform"] = std::move(su);
  } else {
    out["star_uniform"] = {{"applicable", false}, {"why", r.inapplicable}};
  }
  out["component_counts"] = r.component_counts ? json(*r.component_counts) : json(nullptr);
  out["max_star_factor"] = r.max_factor ? to_json(*r.max_factor) : json(nullptr);
  out["min_star_factor"] = r.min_factor ? to_json(*r.min_factor) : json(nullptr);
  return out;
}

std::string to_text(const AnalysisReport& r) {
  std::ostringstream out;
  out << "graph6            " << r.graph6 << '\n'
      << "order, size       " << r.order << ", " << r.size << '\n'
      << "min degree        " << r.min_degree << '\n'
      << "connected         " << (r.connected ? "yes" : "no") << '\n'
      << "girth             " << (r.girth ? std::to_string(*r.girth) : "none (forest)") << '\n'
      << "bipartition       "
      << (r.bipartition_sizes
              ? std::to_string(r.bipartition_sizes->first) + " + " + std::to_string(r.bipartition_sizes->second)
              : "not bipartite")
      << '\n'
      << "matching number   " << r.matching_number << '\n'
      << "domination number " << r.domination_number << '\n'
      << "GE partition      |D|=" << r.ge_d << " |A|=" << r.ge_a << " |C|=" << r.ge_c << '\n';
  if (r.star_uniform) {
    out << "star-uniform      " << (*r.star_uniform ? "yes" : "no") << " (" << to_string(r.verdict->reason) << ")\n";
  } else {
    out << "star-uniform      n/a (" << r.inapplicable << ")\n";
  }
  if (r.component_counts) {
    out << "component counts  {";
    for (std::size_t i = 0; i < r.component_counts->size(); ++i) out << (i ? ", " : "") << (*r.component_counts)[i];
    out << "}\n";
  }
  if (r.max_factor) out << "max star-factor   " << r.max_factor->component_count() << " components\n";
  if (r.min_factor) out << "min star-factor   " << r.min_factor->component_count() << " components\n";
  return out.str();
}

}  // namespace staruniform
