#include "staruniform/verification.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <exception>
#include <iomanip>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "staruniform/decomposition.hpp"
#include "staruniform/domination.hpp"
#include "staruniform/enumerate.hpp"
#include "staruniform/generators.hpp"
#include "staruniform/graph_io.hpp"
#include "staruniform/matching.hpp"
#include "staruniform/star_factor.hpp"
#include "staruniform/uniformity.hpp"

namespace staruniform {
namespace {

enum Claim : std::size_t {
  kCatalogCount,
  kGraph6Roundtrip,
  kProp2,
  kProp3,
  kThm4,
  kProp5,
  kThm5,
  kThm6,
  kThm1a,
  kThm1b,
  kThm1c,
  kThm1d,
  kClaim1,
  kClaim2,
  kClaim3,
  kClaim4,
  kClaim5,
  kFigure3,
  kClaimCount,
};

constexpr std::array<std::string_view, kClaimCount> kNames = {
    "catalog_count", "graph6_roundtrip", "prop2", "prop3",  "thm4",   "prop5",  "thm5",   "thm6",   "thm1a",
    "thm1b",         "thm1c",            "thm1d", "claim1", "claim2", "claim3", "claim4", "claim5", "figure3",
};

constexpr std::size_t kMaxCounterexamples = 5;
constexpr std::size_t kSampleBatch = 4096;
constexpr int kFigure3Blocks = 5;

// kAbsent: the graph is outside the claim's hypothesis and is not counted.
enum class Mark : std::uint8_t { kAbsent, kSkip, kPass, kFail };

struct Outcome {
  std::array<Mark, kClaimCount> marks{};
  std::optional<std::pair<int, int>> bipartite_accept;

  void set(Claim c, bool ok) { marks[c] = ok ? Mark::kPass : Mark::kFail; }
  void set(Claim c, ClauseStatus s) {
    marks[c] = s == ClauseStatus::kSkipped ? Mark::kSkip : s == ClauseStatus::kPass ? Mark::kPass : Mark::kFail;
  }
};

bool independent(const Graph& g, const VertexSet& set) {
  for (std::size_t i = 0; i < set.size(); ++i)
    for (std::size_t j = i + 1; j < set.size(); ++j)
      if (g.adjacent(set[i], set[j])) return false;
  return true;
}

/// Checks shared by corpus graphs and samples, for connected graphs with
/// minimum degree >= 2. `oracle_uniform` is set only when the exact
/// component-count oracle was run.
void check_min_degree_two(const Graph& g, int nu, int gamma, std::optional<bool> oracle_uniform,
                          const std::optional<GEDecomposition>& known_dec, Outcome& out) {
  const bool uniform = nu == gamma;
  const UniformityVerdict verdict = recognize_min_deg2(g);
  out.set(kThm6, verdict.uniform == uniform && (!oracle_uniform || *oracle_uniform == verdict.uniform) &&
                     (verdict.uniform || (verdict.witness && verdict.witness->first != verdict.witness->second)));
  if (verdict.uniform && verdict.reason == UniformityReason::kBipartiteGirth4GammaX) {
    const auto sides = bipartition(g);
    out.bipartite_accept = std::pair{static_cast<int>(sides->x.size()), static_cast<int>(sides->y.size())};
  }
  if (!uniform) return;

  if (2 * nu != g.order()) {
    const GEDecomposition dec = known_dec ? *known_dec : decompose(g);
    out.set(kClaim1, dec.c.empty());
    out.set(kClaim2, independent(g, dec.a));
    // D-components are all singletons exactly when D is independent.
    out.set(kClaim3, dec.a.empty() || independent(g, dec.d));
    if (bipartition(g)) {
      const int a = static_cast<int>(dec.a.size());
      out.set(kClaim5, girth(g) == 4 && gamma == a && 2 <= a && a < static_cast<int>(dec.d.size()));
    }
  }
  if (is_factor_critical(g)) out.set(kClaim4, g.order() <= 7);
}

void check_prop5(const Graph& g, int nu, int gamma, Outcome& out) {
  if (const auto sides = bipartition(g); sides && gamma == static_cast<int>(sides->x.size()))
    out.set(kProp5, nu >= static_cast<int>(sides->x.size()));
}

Outcome check_corpus_graph(const Graph& g) {
  Outcome out;
  out.set(kGraph6Roundtrip, from_graph6(to_graph6(g)) == g);

  const GEDecomposition dec = decompose(g);
  const StructureReport ge = verify_structure(g, dec);
  out.set(kThm1a, ge.d_components_factor_critical);
  out.set(kThm1b, ge.c_has_perfect_matching);
  out.set(kThm1c, ge.a_smaller_than_d_components);
  out.set(kThm1d, ge.matching_respects_partition);

  if (has_isolated_vertex(g)) return out;
  const int nu = matching_number(g);
  const int gamma = domination_number(g);
  out.set(kThm4, gamma <= g.order() / 2);
  if (!is_connected(g)) return out;

  check_prop5(g, nu, gamma, out);
  const std::vector<int> counts = enumerate_component_counts(g, std::max(kDefaultOracleCap, g.order()));
  const StarFactor max_factor = max_component_star_factor(g);
  const StarFactor min_factor = min_component_star_factor(g);
  out.set(kProp2, counts.back() == nu && is_star_factor(g, max_factor) && max_factor.component_count() == nu);
  out.set(kProp3, counts.front() == gamma && is_star_factor(g, min_factor) && min_factor.component_count() == gamma);
  const bool single = counts.size() == 1;
  out.set(kThm5, single == (nu == gamma) && is_star_uniform(g) == single);
  if (min_degree(g) >= 2) check_min_degree_two(g, nu, gamma, single, dec, out);
  return out;
}

std::optional<Outcome> check_sample(const Graph& g) {
  if (min_degree(g) < 2 || !is_connected(g)) return std::nullopt;
  Outcome out;
  const int nu = matching_number(g);
  const int gamma = domination_number(g);
  out.set(kThm4, gamma <= g.order() / 2);
  check_prop5(g, nu, gamma, out);
  check_min_degree_two(g, nu, gamma, std::nullopt, std::nullopt, out);
  return out;
}

template <typename Result, typename Fn>
std::vector<Result> parallel_map(std::size_t count, unsigned workers, Fn fn) {
  std::vector<Result> results(count);
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;
  const auto work = [&] {
    try {
      for (std::size_t i = next++; i < count; i = next++) results[i] = fn(i);
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
      next = count;
    }
  };
  const unsigned extra = std::min<std::size_t>(std::max(workers, 1u), std::max<std::size_t>(count, 1)) - 1;
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < extra; ++t) pool.emplace_back(work);
    work();
  }
  if (error) std::rethrow_exception(error);
  return results;
}

class Tally {
 public:
  explicit Tally(const std::array<bool, kClaimCount>& enabled) : enabled_(enabled) {
    for (std::size_t c = 0; c < kClaimCount; ++c) results_[c].name = kNames[c];
  }

  void add(Claim c, Mark m, const Graph& g) {
    if (!enabled_[c]) return;
    ClaimResult& r = results_[c];
    switch (m) {
      case Mark::kAbsent: break;
      case Mark::kSkip: ++r.skip; break;
      case Mark::kPass: ++r.pass; break;
      case Mark::kFail:
        ++r.fail;
        if (r.counterexamples.size() < kMaxCounterexamples) r.counterexamples.push_back(to_graph6(g));
        break;
    }
  }

  void add(const Outcome& o, const Graph& g, VerificationReport& report) {
    for (std::size_t c = 0; c < kClaimCount; ++c) add(static_cast<Claim>(c), o.marks[c], g);
    if (o.bipartite_accept) ++report.bipartite_profile[*o.bipartite_accept];
  }

  std::vector<ClaimResult> finish() const {
    std::vector<ClaimResult> out;
    for (std::size_t c = 0; c < kClaimCount; ++c)
      if (enabled_[c]) out.push_back(results_[c]);
    return out;
  }

 private:
  std::array<bool, kClaimCount> enabled_;
  std::array<ClaimResult, kClaimCount> results_;
};

std::uint64_t order_seed(std::uint64_t seed, int n) {
  return seed ^ (0x9E3779B97F4A7C15ull * static_cast<std::uint64_t>(n));
}

}  // namespace

const std::vector<std::string_view>& claim_names() {
  static const std::vector<std::string_view> names(kNames.begin(), kNames.end());
  return names;
}

bool VerificationReport::all_pass() const {
  return std::all_of(claims.begin(), claims.end(), [](const ClaimResult& c) { return c.fail == 0; });
}

const ClaimResult* VerificationReport::find(std::string_view name) const {
  for (const ClaimResult& c : claims)
    if (c.name == name) return &c;
  return nullptr;
}

VerificationReport run_verification(const VerificationOptions& options) {
  const auto started = std::chrono::steady_clock::now();
  if (options.max_order < 1 || options.max_order > kMaxExhaustiveOrder)
    throw std::invalid_argument("max order must lie in 1.." + std::to_string(kMaxExhaustiveOrder));
  if (!(options.edge_prob > 0.0 && options.edge_prob < 1.0))
    throw std::invalid_argument("edge probability must lie in (0, 1)");
  std::array<bool, kClaimCount> enabled{};
  enabled.fill(options.only.empty());
  for (const std::string& name : options.only) {
    const auto it = std::find(kNames.begin(), kNames.end(), name);
    if (it == kNames.end()) throw std::invalid_argument("unknown claim '" + name + "'");
    enabled[static_cast<std::size_t>(it - kNames.begin())] = true;
  }

  VerificationReport report;
  report.options = options;
  Tally tally(enabled);

  const auto& catalog = derive_figure2_catalog();
  report.catalog_count = catalog.size();
  if (enabled[kCatalogCount]) {
    tally.add(kCatalogCount, catalog.size() == kFigure2CatalogSize ? Mark::kPass : Mark::kFail, Graph(0));
    for (const Graph& g : catalog)
      tally.add(kCatalogCount, enumerate_component_counts(g).size() == 1 ? Mark::kPass : Mark::kFail, g);
  }
  if (enabled[kFigure3]) {
    for (int k = 1; k <= kFigure3Blocks; ++k) {
      const Graph g = k22_block_chain(k);
      const auto counts = enumerate_component_counts(g, g.order());
      tally.add(kFigure3, counts.size() == 1 && counts.front() == domination_number(g) ? Mark::kPass : Mark::kFail, g);
    }
  }

  std::vector<Graph> corpus;
  for (int n = 1; n <= options.max_order; ++n) {
    auto classes = isomorphism_classes(n);
    corpus.insert(corpus.end(), classes.begin(), classes.end());
  }
  report.exhaustive_graphs = corpus.size();
  const auto outcomes =
      parallel_map<Outcome>(corpus.size(), options.workers, [&](std::size_t i) { return check_corpus_graph(corpus[i]); });
  for (std::size_t i = 0; i < corpus.size(); ++i) tally.add(outcomes[i], corpus[i], report);

  for (int n : {8, 9, 10}) {
    GraphSampler sampler(n, order_seed(options.seed, n), options.edge_prob);
    std::size_t drawn = 0, in_scope = 0;
    while (drawn < options.samples) {
      const std::size_t batch = std::min(kSampleBatch, options.samples - drawn);
      std::vector<Graph> graphs;
      graphs.reserve(batch);
      for (std::size_t i = 0; i < batch; ++i) graphs.push_back(sampler.next());
      const auto results = parallel_map<std::optional<Outcome>>(batch, options.workers,
                                                                [&](std::size_t i) { return check_sample(graphs[i]); });
      for (std::size_t i = 0; i < batch; ++i) {
        if (!results[i]) continue;
        ++in_scope;
        tally.add(*results[i], graphs[i], report);
      }
      drawn += batch;
    }
    report.samples_drawn[n] = drawn;
    report.samples_in_scope[n] = in_scope;
  }

  report.claims = tally.finish();
  report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

nlohmann::ordered_json to_json(const VerificationReport& r, bool include_timing) {
  using json = nlohmann::ordered_json;
  json out;
  json only = json::array();
  for (const std::string& name : r.options.only) only.push_back(name);
  out["options"] = {{"max_order", r.options.max_order},
                    {"samples_per_order", r.options.samples},
                    {"seed", r.options.seed},
                    {"edge_prob", r.options.edge_prob},
                    {"only", std::move(only)}};
  json drawn = json::object(), scoped = json::object();
  for (const auto& [n, c] : r.samples_drawn) drawn[std::to_string(n)] = c;
  for (const auto& [n, c] : r.samples_in_scope) scoped[std::to_string(n)] = c;
  out["corpus"] = {{"exhaustive_graphs", r.exhaustive_graphs}, {"samples_drawn", drawn}, {"samples_in_scope", scoped}};
  out["catalog_count"] = r.catalog_count;
  json claims = json::array();
  for (const ClaimResult& c : r.claims)
    claims.push_back({{"name", c.name},
                      {"status", c.fail ? "fail" : "pass"},
                      {"pass", c.pass},
                      {"fail", c.fail},
                      {"skip", c.skip},
                      {"counterexamples", c.counterexamples}});
  out["claims"] = std::move(claims);
  json profile = json::array();
  for (const auto& [sides, count] : r.bipartite_profile)
    profile.push_back({{"x", sides.first}, {"y", sides.second}, {"count", count}});
  out["bipartite_profile"] = std::move(profile);
  out["all_pass"] = r.all_pass();
  if (include_timing) out["elapsed_seconds"] = r.elapsed_seconds;
  return out;
}

std::string to_text(const VerificationReport& r) {
  std::ostringstream out;
  out << "exhaustive corpus: " << r.exhaustive_graphs << " isomorphism classes, orders 1.." << r.options.max_order
      << '\n';
  for (const auto& [n, c] : r.samples_drawn)
    out << "samples n=" << n << ": " << c << " drawn, " << r.samples_in_scope.at(n)
        << " connected with min degree >= 2 (seed " << r.options.seed << ")\n";
  out << "catalog size: " << r.catalog_count << "\n\n";
  out << std::left << std::setw(18) << "claim" << std::right << std::setw(10) << "pass" << std::setw(8) << "fail"
      << std::setw(10) << "skip" << '\n';
  for (const ClaimResult& c : r.claims) {
    out << std::left << std::setw(18) << c.name << std::right << std::setw(10) << c.pass << std::setw(8) << c.fail
        << std::setw(10) << c.skip << '\n';
    for (const std::string& g6 : c.counterexamples) out << "    counterexample: " << g6 << '\n';
  }
  out << "\naccepted bipartite graphs by (|X|, |Y|):";
  for (const auto& [sides, count] : r.bipartite_profile)
    out << " (" << sides.first << "," << sides.second << ")x" << count;
  out << '\n' << (r.all_pass() ? "ALL CLAIMS PASS" : "SOME CLAIMS FAIL") << '\n';
  out << "elapsed: " << std::fixed << std::setprecision(2) << r.elapsed_seconds << " s\n";
  return out.str();
}

}  // namespace staruniform
