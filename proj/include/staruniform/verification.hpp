#ifndef STARUNIFORM_VERIFICATION_HPP
#define STARUNIFORM_VERIFICATION_HPP

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

namespace staruniform {

/// Claims checked by run_verification, in report order.
///
///   catalog_count     catalog has 9 classes, each with one component count
///   graph6_roundtrip  decode(encode(G)) == G
///   prop2 / prop3     max / min component counts equal nu / gamma, and the
///                     constructors achieve them with valid star-factors
///   thm4              gamma <= floor(n/2) without isolated vertices
///   prop5             connected bipartite, gamma = |X| implies nu >= |X|
///   thm5              one achievable count iff nu == gamma
///   thm6              structural recogniser agrees with nu == gamma
///   thm1a..thm1d      Gallai-Edmonds clauses; thm1c skipped when D is empty
///   claim1..claim3    uniform, min degree >= 2, no perfect matching:
///                     C empty, A independent, A nonempty => D singletons
///   claim4            factor-critical uniform min-degree-2 graphs have n <= 7
///   claim5            same hypothesis as claim1, bipartite: girth 4,
///                     gamma = |A| and 2 <= |A| < |D|
///   figure3           K22 block chains, k = 1..5: one count, equal to gamma
const std::vector<std::string_view>& claim_names();

struct VerificationOptions {
  int max_order = 7;
  /// Samples drawn at each of the orders 8, 9 and 10.
  std::size_t samples = 100000;
  std::uint64_t seed = 42;
  double edge_prob = 0.5;
  unsigned workers = 1;
  /// Restrict to these claims; empty means all.
  std::set<std::string> only;
};

struct ClaimResult {
  std::string name;
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t skip = 0;
  std::vector<std::string> counterexamples;  // graph6, first few in corpus order
};

struct VerificationReport {
  VerificationOptions options;
  std::size_t exhaustive_graphs = 0;
  std::map<int, std::size_t> samples_drawn;     // by order
  std::map<int, std::size_t> samples_in_scope;  // connected, min degree >= 2
  std::vector<ClaimResult> claims;
  std::size_t catalog_count = 0;
  /// (|X|, |Y|) of graphs accepted through the bipartite clause.
  std::map<std::pair<int, int>, std::size_t> bipartite_profile;
  double elapsed_seconds = 0.0;

  bool all_pass() const;
  const ClaimResult* find(std::string_view name) const;
};

/// Throws std::invalid_argument for an unknown claim name or max_order
/// outside 1..7.
VerificationReport run_verification(const VerificationOptions& options);

/// Timing is only included on request so JSON output is byte-stable.
nlohmann::ordered_json to_json(const VerificationReport& report, bool include_timing = false);
std::string to_text(const VerificationReport& report);

}  // namespace staruniform

#endif  // STARUNIFORM_VERIFICATION_HPP
