// staruniform: analyse graphs, print the odd-cycle catalog, generate graph
// families and run the corpus verification.
//
// Exit codes: 0 success, 1 a verified claim failed, 2 bad input or usage.

#include <charconv>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "staruniform/analysis.hpp"
#include "staruniform/domination.hpp"
#include "staruniform/generators.hpp"
#include "staruniform/graph_io.hpp"
#include "staruniform/matching.hpp"
#include "staruniform/uniformity.hpp"
#include "staruniform/verification.hpp"

namespace {

using namespace staruniform;

constexpr int kExitClaimFailure = 1;
constexpr int kExitInputError = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), {}};
}

Graph parse_graph(const std::string& text, const std::string& format) {
  return format == "edgelist" ? parse_edge_list(text) : from_graph6(text);
}

int cmd_analyze(const std::string& path, const std::string& format, bool json, int oracle_cap) {
  const Graph g = parse_graph(read_input(path), format);
  const AnalysisReport report = analyze(g, oracle_cap);
  if (json)
    std::cout << to_json(report).dump(2) << '\n';
  else
    std::cout << to_text(report);
  return 0;
}

int cmd_verify(const VerificationOptions& options, bool json) {
  const VerificationReport report = run_verification(options);
  if (json)
    std::cout << to_json(report).dump(2) << '\n';
  else
    std::cout << to_text(report);
  return report.all_pass() ? 0 : kExitClaimFailure;
}

int cmd_catalog(bool json) {
  const auto& catalog = derive_figure2_catalog();
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const Graph& g : catalog) {
    const std::string g6 = to_graph6(g);
    const int nu = matching_number(g), gamma = domination_number(g);
    if (json)
      out.push_back({{"graph6", g6}, {"n", g.order()}, {"nu", nu}, {"gamma", gamma}});
    else
      std::cout << g6 << " n=" << g.order() << " nu=" << nu << " gamma=" << gamma << '\n';
  }
  if (json) std::cout << out.dump(2) << '\n';
  if (catalog.size() != kFigure2CatalogSize) {
    std::cerr << "catalog derivation produced " << catalog.size() << " graphs, expected " << kFigure2CatalogSize
              << '\n';
    return kExitClaimFailure;
  }
  return 0;
}

Graph figure2_member(std::string_view index_text) {
  int index = 0;
  const auto [ptr, ec] = std::from_chars(index_text.data(), index_text.data() + index_text.size(), index);
  const auto& catalog = figure2_catalog();
  if (ec != std::errc{} || ptr != index_text.data() + index_text.size() || index < 1 ||
      index > static_cast<int>(catalog.size()))
    throw GraphError("figure2 index must be 1.." + std::to_string(catalog.size()));
  return catalog[static_cast<std::size_t>(index - 1)];
}

int cmd_generate(const std::string& spec, const std::string& format) {
  constexpr std::string_view kFigure2 = "figure2:";
  const Graph g = std::string_view(spec).starts_with(kFigure2)
                      ? figure2_member(std::string_view(spec).substr(kFigure2.size()))
                      : generate_family(spec);
  if (format == "edgelist")
    std::cout << format_edge_list(g);
  else
    std::cout << to_graph6(g) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Star-factors, star-uniformity and matching structure of small graphs"};
  app.require_subcommand(1);

  std::string format = "graph6";
  const auto format_check = CLI::IsMember({"graph6", "edgelist"});

  auto* analyze = app.add_subcommand("analyze", "Report matching, domination and star-factor data for one graph");
  std::string input = "-";
  bool analyze_json = false;
  int oracle_cap = kDefaultOracleCap;
  analyze->add_option("input", input, "Input file, '-' for stdin")->capture_default_str();
  analyze->add_option("--format", format, "Input format")->check(format_check)->capture_default_str();
  analyze->add_flag("--json", analyze_json, "Emit JSON");
  analyze->add_option("--oracle-cap", oracle_cap, "Largest order for exhaustive component counts")
      ->check(CLI::Range(0, kMaxOracleOrder))
      ->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Check every structural claim over an exhaustive and sampled corpus");
  VerificationOptions options;
  options.workers = std::max(1u, std::thread::hardware_concurrency());
  bool verify_json = false;
  std::vector<std::string> only;
  verify->add_option("--max-order", options.max_order, "Exhaustive corpus order bound")
      ->check(CLI::Range(1, 7))
      ->capture_default_str();
  verify->add_option("--samples", options.samples, "Random samples at each of n = 8, 9, 10")->capture_default_str();
  verify->add_option("--seed", options.seed, "Sampling seed")->capture_default_str();
  verify->add_option("--edge-prob", options.edge_prob, "G(n,p) edge probability")->capture_default_str();
  verify->add_option("--workers", options.workers, "Worker threads (output does not depend on this)")
      ->check(CLI::PositiveNumber);
  verify->add_option("--only", only, "Restrict to named claims (repeatable)");
  verify->add_flag("--json", verify_json, "Emit JSON (no timing fields)");

  auto* catalog = app.add_subcommand("catalog", "Print the nine odd-cycle star-uniform graphs");
  bool catalog_json = false;
  catalog->add_flag("--json", catalog_json, "Emit JSON");

  auto* generate = app.add_subcommand("generate", "Emit a graph from a family spec");
  std::string spec;
  generate->add_option("spec", spec, "cycle:n, path:n, star:n, kbip:m,n, k22chain:k, complete:n or figure2:i")
      ->required();
  generate->add_option("--format", format, "Output format")->check(format_check)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }

  try {
    if (*analyze) return cmd_analyze(input, format, analyze_json, oracle_cap);
    if (*verify) {
      options.only.insert(only.begin(), only.end());
      return cmd_verify(options, verify_json);
    }
    if (*catalog) return cmd_catalog(catalog_json);
    if (*generate) return cmd_generate(spec, format);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitClaimFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}
