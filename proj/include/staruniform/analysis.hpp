#ifndef STARUNIFORM_ANALYSIS_HPP
#define STARUNIFORM_ANALYSIS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "staruniform/graph.hpp"
#include "staruniform/star_factor.hpp"
#include "staruniform/uniformity.hpp"

namespace staruniform {

/// Everything `staruniform analyze` reports about one graph. Optional fields
/// are absent when they do not apply (forest girth, non-bipartite graph,
/// disconnected input for uniformity, order above the oracle cap).
struct AnalysisReport {
  std::string graph6;
  int order = 0;
  std::size_t size = 0;
  int min_degree = 0;
  bool connected = false;
  std::optional<int> girth;
  std::optional<std::pair<int, int>> bipartition_sizes;
  int matching_number = 0;
  int domination_number = 0;
  int ge_d = 0;
  int ge_a = 0;
  int ge_c = 0;
  std::optional<bool> star_uniform;
  std::optional<UniformityVerdict> verdict;
  std::string inapplicable;  // why uniformity fields are missing, if they are
  std::optional<std::vector<int>> component_counts;
  std::optional<StarFactor> max_factor;
  std::optional<StarFactor> min_factor;
};

AnalysisReport analyze(const Graph& g, int oracle_cap = kDefaultOracleCap);

nlohmann::ordered_json to_json(const AnalysisReport& report);
nlohmann::ordered_json to_json(const StarFactor& factor);
std::string to_text(const AnalysisReport& report);

}  // namespace staruniform

#endif  // STARUNIFORM_ANALYSIS_HPP
