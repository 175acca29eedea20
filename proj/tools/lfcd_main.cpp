// Command-line front end: generate planted benchmarks, run either detector,
// dump centralities, score partitions, and sweep detector comparisons.

#include <charconv>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lfcd/centrality.hpp"
#include "lfcd/experiment.hpp"
#include "lfcd/graph.hpp"
#include "lfcd/leader_follower.hpp"
#include "lfcd/metrics.hpp"
#include "lfcd/partition.hpp"
#include "lfcd/planted.hpp"
#include "lfcd/spectral.hpp"

namespace {

// Bad flag combinations detected after CLI11 parsing.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw lfcd::Error("cannot open input file: " + path);
  return in;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw lfcd::Error("cannot open output file: " + path);
  return out;
}

void finish_output(std::ofstream& out, const std::string& path) {
  out.flush();
  if (!out) throw lfcd::Error("failed writing output file: " + path);
}

// "7" or "3..12", inclusive on both ends.
std::pair<std::uint64_t, std::uint64_t> parse_seed_range(
    const std::string& text) {
  const auto parse = [&text](std::string_view part) {
    std::uint64_t value = 0;
    const auto [ptr, ec] =
        std::from_chars(part.data(), part.data() + part.size(), value);
    if (ec != std::errc{} || ptr != part.data() + part.size()) {
      throw UsageError("bad seed range '" + text + "'");
    }
    return value;
  };
  const std::string_view view = text;
  const auto dots = view.find("..");
  if (dots == std::string_view::npos) {
    const std::uint64_t only = parse(view);
    return {only, only};
  }
  const auto begin = parse(view.substr(0, dots));
  const auto end = parse(view.substr(dots + 2));
  if (begin > end) throw UsageError("bad seed range '" + text + "'");
  return {begin, end};
}

struct GenerateArgs {
  std::uint32_t communities = 0;
  std::uint32_t size_min = 0;
  std::uint32_t size_max = 0;
  std::uint64_t inter_edges = 0;
  std::uint64_t seed = 0;
  bool allow_disconnected = false;
  std::string graph_out;
  std::string truth_out;
};

void run_generate(const GenerateArgs& args) {
  lfcd::PlantedSpec spec;
  spec.num_communities = args.communities;
  spec.size_min = args.size_min;
  spec.size_max = args.size_max;
  spec.inter_edges = args.inter_edges;
  spec.seed = args.seed;
  spec.require_connected = !args.allow_disconnected;
  const lfcd::PlantedInstance instance = lfcd::generate(spec);
  const lfcd::NodeIdMap ids =
      lfcd::NodeIdMap::identity(instance.graph.node_count());
  auto graph_out = open_output(args.graph_out);
  lfcd::write_edge_list(graph_out, instance.graph, ids);
  finish_output(graph_out, args.graph_out);
  auto truth_out = open_output(args.truth_out);
  lfcd::write_partition(truth_out, instance.truth, ids);
  finish_output(truth_out, args.truth_out);
}

struct DetectArgs {
  std::string graph_in;
  std::string algo = "lf";
  std::uint32_t k = 0;
  bool k_given = false;
  std::uint64_t seed = 0;
  std::string partition_out;
};

void run_detect(const DetectArgs& args) {
  auto in = open_input(args.graph_in);
  const lfcd::LoadedGraph loaded = lfcd::load_edge_list(in);
  lfcd::Partition result;
  if (args.algo == "lf") {
    result = lfcd::detect(loaded.graph);
  } else {
    if (!args.k_given) {
      throw UsageError("--algo spectral requires --k");
    }
    result = lfcd::spectral_cluster(loaded.graph, args.k, args.seed);
  }
  auto out = open_output(args.partition_out);
  lfcd::write_partition(out, result, loaded.ids);
  finish_output(out, args.partition_out);
}

void run_centrality(const std::string& graph_in) {
  auto in = open_input(graph_in);
  const lfcd::LoadedGraph loaded = lfcd::load_edge_list(in);
  const lfcd::CentralityVector dc =
      lfcd::distance_centrality_all(loaded.graph);
  std::vector<std::pair<std::string, std::uint64_t>> lines;
  lines.reserve(dc.size());
  for (std::size_t v = 0; v < dc.size(); ++v) {
    lines.emplace_back(loaded.ids.internal_to_external[v], dc[v]);
  }
  std::sort(lines.begin(), lines.end());
  for (const auto& [label, value] : lines) {
    std::cout << label << '\t' << value << '\n';
  }
}

void run_score(const std::string& truth_path, const std::string& pred_path) {
  auto truth_in = open_input(truth_path);
  const auto truth_rows = lfcd::read_partition(truth_in);
  auto pred_in = open_input(pred_path);
  const auto pred_rows = lfcd::read_partition(pred_in);
  if (truth_rows.size() != pred_rows.size()) {
    throw lfcd::Error("partitions cover different node sets (" +
                      std::to_string(truth_rows.size()) + " vs " +
                      std::to_string(pred_rows.size()) + " labels)");
  }
  std::vector<std::uint32_t> truth_ids;
  std::vector<std::uint32_t> pred_ids;
  truth_ids.reserve(truth_rows.size());
  pred_ids.reserve(truth_rows.size());
  for (const auto& [label, community] : truth_rows) {
    const auto it = pred_rows.find(label);
    if (it == pred_rows.end()) {
      throw lfcd::Error("label '" + label +
                        "' is missing from the predicted partition");
    }
    truth_ids.push_back(community);
    pred_ids.push_back(it->second);
  }
  const lfcd::ScoreReport report =
      lfcd::score(lfcd::canonical_partition(truth_ids),
                  lfcd::canonical_partition(pred_ids));
  std::cout << lfcd::format_score(report) << '\n';
}

struct CompareArgs {
  std::uint32_t communities = 0;
  std::uint32_t size_min = 0;
  std::uint32_t size_max = 0;
  std::string seeds;
  std::vector<std::uint64_t> inter_edges;
  std::string csv_out;
};

void run_compare(const CompareArgs& args) {
  lfcd::CompareConfig config;
  config.communities = args.communities;
  config.size_min = args.size_min;
  config.size_max = args.size_max;
  std::tie(config.seed_begin, config.seed_end) = parse_seed_range(args.seeds);
  config.inter_edges = args.inter_edges;
  const auto rows = lfcd::run_comparison(config);
  auto out = open_output(args.csv_out);
  out << lfcd::comparison_csv(rows);
  finish_output(out, args.csv_out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Leader-follower community detection toolkit"};
  app.require_subcommand(1);

  GenerateArgs generate_args;
  CLI::App* generate = app.add_subcommand(
      "generate", "Generate a planted clique-community benchmark");
  generate->add_option("--communities", generate_args.communities)
      ->required();
  generate->add_option("--size-min", generate_args.size_min)->required();
  generate->add_option("--size-max", generate_args.size_max)->required();
  generate->add_option("--inter-edges", generate_args.inter_edges)->required();
  generate->add_option("--seed", generate_args.seed)->required();
  generate->add_flag("--allow-disconnected",
                     generate_args.allow_disconnected);
  generate->add_option("--graph-out", generate_args.graph_out)->required();
  generate->add_option("--truth-out", generate_args.truth_out)->required();

  DetectArgs detect_args;
  CLI::App* detect =
      app.add_subcommand("detect", "Detect communities in an edge list");
  detect->add_option("--graph", detect_args.graph_in)->required();
  detect->add_option("--algo", detect_args.algo)
      ->check(CLI::IsMember({"lf", "spectral"}));
  CLI::Option* k_option = detect->add_option("--k", detect_args.k);
  detect->add_option("--seed", detect_args.seed);
  detect->add_option("--out", detect_args.partition_out)->required();

  std::string centrality_graph;
  CLI::App* centrality = app.add_subcommand(
      "centrality", "Print per-node distance centrality");
  centrality->add_option("--graph", centrality_graph)->required();

  std::string score_truth;
  std::string score_pred;
  CLI::App* score =
      app.add_subcommand("score", "Pair-error between two partitions");
  score->add_option("--truth", score_truth)->required();
  score->add_option("--pred", score_pred)->required();

  CompareArgs compare_args;
  CLI::App* compare = app.add_subcommand(
      "compare", "Sweep planted benchmarks through both detectors");
  compare->add_option("--communities", compare_args.communities)->required();
  compare->add_option("--size-min", compare_args.size_min)->required();
  compare->add_option("--size-max", compare_args.size_max)->required();
  compare->add_option("--seeds", compare_args.seeds)->required();
  compare->add_option("--inter-edges", compare_args.inter_edges)
      ->required()
      ->delimiter(',');
  compare->add_option("--csv-out", compare_args.csv_out)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    detect_args.k_given = k_option->count() > 0;
    if (generate->parsed()) {
      run_generate(generate_args);
    } else if (detect->parsed()) {
      run_detect(detect_args);
    } else if (centrality->parsed()) {
      run_centrality(centrality_graph);
    } else if (score->parsed()) {
      run_score(score_truth, score_pred);
    } else if (compare->parsed()) {
      run_compare(compare_args);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const lfcd::NumericError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const lfcd::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
