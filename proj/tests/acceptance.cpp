// Acceptance suite: every release-gating property as one pass/fail line.
// Exits nonzero if any criterion fails. Pass the CLI binary path as argv[1]
// so the determinism criterion can drive the real executable.

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lfcd/centrality.hpp"
#include "lfcd/experiment.hpp"
#include "lfcd/graph.hpp"
#include "lfcd/leader_follower.hpp"
#include "lfcd/metrics.hpp"
#include "lfcd/partition.hpp"
#include "lfcd/planted.hpp"
#include "lfcd/rng.hpp"
#include "lfcd/spectral.hpp"
#include "oracles.hpp"

namespace {

using lfcd::Graph;
using lfcd::NodeId;
using lfcd::Partition;
using lfcd::PlantedSpec;

struct Outcome {
  bool pass = false;
  std::string detail;
};

// The shared benchmark sweep: 100 random planted specs, each probed once to
// learn its cross-pair budget, then swept over density fractions of that
// budget. Connectivity is requested only where the retry loop is sure to
// find it; exactness is asserted on every cell either way.
std::vector<PlantedSpec> sweep_cells() {
  std::mt19937_64 meta(20260816);
  std::vector<PlantedSpec> cells;
  for (int trial = 0; trial < 100; ++trial) {
    PlantedSpec base;
    base.num_communities =
        2 + static_cast<std::uint32_t>(lfcd::uniform_below(meta, 14));
    base.size_min = 2;
    base.size_max =
        2 + static_cast<std::uint32_t>(lfcd::uniform_below(meta, 29));
    base.seed = meta();
    base.inter_edges = 0;
    base.require_connected = false;

    const auto probe = lfcd::generate(base);
    const auto members = lfcd::community_members(probe.truth);
    std::uint64_t budget = 0;
    for (std::size_t a = 0; a < members.size(); ++a) {
      for (std::size_t b = a + 1; b < members.size(); ++b) {
        budget += (members[a].size() - 1) * (members[b].size() - 1);
      }
    }

    std::vector<std::uint64_t> densities;
    for (const std::uint64_t percent : {0, 10, 25, 50, 80}) {
      densities.push_back(budget * percent / 100);
    }
    std::sort(densities.begin(), densities.end());
    densities.erase(std::unique(densities.begin(), densities.end()),
                    densities.end());
    for (const std::uint64_t inter : densities) {
      PlantedSpec cell = base;
      cell.inter_edges = inter;
      cell.require_connected = inter >= 4ull * base.num_communities;
      cells.push_back(cell);
    }
  }
  return cells;
}

// Criterion 1: the detector recovers every planted partition exactly,
// across community counts, size ranges, and inter-edge densities.
Outcome criterion_planted_exactness() {
  const auto cells = sweep_cells();
  std::size_t connected = 0;
  for (const PlantedSpec& cell : cells) {
    const auto instance = lfcd::generate(cell);
    if (lfcd::connected_components(instance.graph).size() == 1) ++connected;
    const Partition found = lfcd::detect(instance.graph);
    const std::uint64_t error = lfcd::pair_error(instance.truth, found);
    if (error != 0) {
      return {false, "seed " + std::to_string(cell.seed) + " inter " +
                         std::to_string(cell.inter_edges) + " pair_error " +
                         std::to_string(error)};
    }
  }
  return {true, std::to_string(cells.size()) + " cells exact (" +
                    std::to_string(connected) + " connected)"};
}

// Criterion 2: on the reference benchmark the leader-follower detector is
// always exact while the spectral baseline degrades as inter-community
// edges multiply.
Outcome criterion_detector_comparison() {
  lfcd::CompareConfig config;
  config.communities = 10;
  config.size_min = 2;
  config.size_max = 30;
  config.seed_begin = 1;
  config.seed_end = 20;
  config.inter_edges = {200, 2000};
  const auto rows = lfcd::run_comparison(config);

  double sparse_total = 0.0;
  double dense_total = 0.0;
  std::size_t sparse_rows = 0;
  std::size_t dense_rows = 0;
  for (const auto& row : rows) {
    if (row.lf_error != 0) {
      return {false, "lf_error " + std::to_string(row.lf_error) + " at seed " +
                         std::to_string(row.seed) + " inter " +
                         std::to_string(row.inter_edges)};
    }
    if (row.inter_edges == 200) {
      sparse_total += static_cast<double>(row.spectral_error);
      ++sparse_rows;
    } else {
      dense_total += static_cast<double>(row.spectral_error);
      ++dense_rows;
    }
  }
  const double sparse_mean = sparse_total / static_cast<double>(sparse_rows);
  const double dense_mean = dense_total / static_cast<double>(dense_rows);
  std::ostringstream detail;
  detail << "lf exact on " << rows.size() << " rows; spectral mean error "
         << sparse_mean << " at 200 vs " << dense_mean << " at 2000";
  if (!(dense_mean > sparse_mean)) return {false, detail.str()};
  return {true, detail.str()};
}

// Criterion 3: distance centrality matches an independent Floyd-Warshall
// oracle exactly on random connected graphs.
Outcome criterion_centrality_oracle() {
  std::mt19937_64 rng(1001);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = oracle::random_connected_graph(rng, 50);
    if (lfcd::distance_centrality_all(g) !=
        oracle::centrality_by_floyd_warshall(g)) {
      return {false, "mismatch on trial " + std::to_string(trial)};
    }
  }
  return {true, "50 random graphs, exact integer agreement"};
}

// Criterion 4: inside every planted community, loyal members share one
// centrality value, every outward-connected member scores strictly lower,
// and the protected follower is never classified as a leader.
Outcome criterion_planted_structure() {
  const auto cells = sweep_cells();
  for (const PlantedSpec& cell : cells) {
    const auto instance = lfcd::generate(cell);
    const Graph& g = instance.graph;
    const NodeId n = g.node_count();

    std::vector<std::uint64_t> centrality(n, 0);
    std::vector<lfcd::Role> role(n, lfcd::Role::Follower);
    for (const auto& component : lfcd::connected_components(g)) {
      const Graph sub = lfcd::induced_subgraph(g, component);
      const auto dc = lfcd::distance_centrality_all(sub);
      const auto roles = lfcd::classify_roles(sub, dc);
      for (std::size_t i = 0; i < component.size(); ++i) {
        centrality[component[i]] = dc[i];
        role[component[i]] = roles.role[i];
      }
    }

    const auto members = lfcd::community_members(instance.truth);
    for (std::uint32_t c = 0; c < instance.truth.num_communities; ++c) {
      std::optional<std::uint64_t> loyal_value;
      std::vector<NodeId> outward;
      for (NodeId v : members[c]) {
        bool loyal = true;
        for (NodeId u : g.neighbors(v)) {
          if (instance.truth.community_of[u] != c) {
            loyal = false;
            break;
          }
        }
        if (!loyal) {
          outward.push_back(v);
        } else if (!loyal_value) {
          loyal_value = centrality[v];
        } else if (*loyal_value != centrality[v]) {
          return {false, "loyal centrality differs in community " +
                             std::to_string(c) + " (seed " +
                             std::to_string(cell.seed) + ")"};
        }
      }
      if (!loyal_value) {
        return {false, "community " + std::to_string(c) +
                           " lost its protected follower (seed " +
                           std::to_string(cell.seed) + ")"};
      }
      for (NodeId v : outward) {
        if (centrality[v] >= *loyal_value) {
          return {false, "leader " + std::to_string(v) +
                             " not below loyal centrality (seed " +
                             std::to_string(cell.seed) + ")"};
        }
      }
      if (role[instance.protected_followers[c]] != lfcd::Role::Follower) {
        return {false, "protected follower of community " + std::to_string(c) +
                           " classified as leader (seed " +
                           std::to_string(cell.seed) + ")"};
      }
    }
  }
  return {true, "centrality ordering and roles hold on all sweep cells"};
}

// Criterion 5: distance centrality scales near-linearly in |V|*|E|. The
// fitted log-log slope over a 64x work range must stay within [0.8, 1.3].
Outcome criterion_complexity() {
  const std::vector<NodeId> node_counts = {100, 200, 400, 800};
  std::vector<lfcd::PlantedInstance> instances;
  std::vector<double> work;
  for (NodeId n : node_counts) {
    PlantedSpec spec;
    spec.num_communities = n / 10;
    spec.size_min = 10;
    spec.size_max = 10;
    spec.inter_edges = 2ull * n;
    spec.seed = 99;
    spec.require_connected = true;
    instances.push_back(lfcd::generate(spec));
    work.push_back(static_cast<double>(n) *
                   static_cast<double>(instances.back().graph.edge_count()));
  }

  // Equalize total work per size so small sizes are timed over many
  // repetitions; take the median of three samples each.
  volatile std::uint64_t sink = 0;
  sink = sink + lfcd::distance_centrality_all(instances.back().graph)[0];
  std::vector<double> seconds;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const auto reps = static_cast<std::uint64_t>(
        std::max(1.0, 3.0 * work.back() / work[i]));
    std::vector<double> samples;
    for (int sample = 0; sample < 3; ++sample) {
      const auto start = std::chrono::steady_clock::now();
      for (std::uint64_t r = 0; r < reps; ++r) {
        sink = sink + lfcd::distance_centrality_all(instances[i].graph)[0];
      }
      const auto stop = std::chrono::steady_clock::now();
      samples.push_back(std::chrono::duration<double>(stop - start).count() /
                        static_cast<double>(reps));
    }
    std::sort(samples.begin(), samples.end());
    seconds.push_back(samples[1]);
  }

  double x_mean = 0.0;
  double y_mean = 0.0;
  const std::size_t count = work.size();
  std::vector<double> xs(count);
  std::vector<double> ys(count);
  for (std::size_t i = 0; i < count; ++i) {
    xs[i] = std::log(work[i]);
    ys[i] = std::log(seconds[i]);
    x_mean += xs[i];
    y_mean += ys[i];
  }
  x_mean /= static_cast<double>(count);
  y_mean /= static_cast<double>(count);
  double numerator = 0.0;
  double denominator = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    numerator += (xs[i] - x_mean) * (ys[i] - y_mean);
    denominator += (xs[i] - x_mean) * (xs[i] - x_mean);
  }
  const double slope = numerator / denominator;
  std::ostringstream detail;
  detail << "log-log slope " << slope << " over V*E range " << work.front()
         << ".." << work.back();
  return {slope >= 0.8 && slope <= 1.3, detail.str()};
}

// Criterion 6: eigensolver residuals stay inside the advertised bound on
// random symmetric matrices, and the Laplacian nullspace dimension counts
// components.
Outcome criterion_eigensolver() {
  std::mt19937_64 rng(1003);
  double worst_ratio = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t order = 2 + lfcd::uniform_below(rng, 199);
    lfcd::DenseSymMatrix m(order);
    for (std::size_t i = 0; i < order; ++i) {
      for (std::size_t j = i; j < order; ++j) {
        const double value = 2.0 * lfcd::uniform01(rng) - 1.0;
        m(i, j) = value;
        m(j, i) = value;
      }
    }
    const auto pairs = lfcd::eigen_smallest_k(m, order);

    double scale = 1.0;
    for (std::size_t i = 0; i < order; ++i) {
      double row = 0.0;
      for (std::size_t j = 0; j < order; ++j) row += std::abs(m(i, j));
      scale = std::max(scale, row);
    }
    double residual = 0.0;
    for (std::size_t c = 0; c < order; ++c) {
      for (std::size_t i = 0; i < order; ++i) {
        double entry = 0.0;
        for (std::size_t l = 0; l < order; ++l) {
          entry += m(i, l) * pairs.vectors.at(l, c);
        }
        entry -= pairs.values[c] * pairs.vectors.at(i, c);
        residual = std::max(residual, std::abs(entry));
      }
    }
    worst_ratio = std::max(worst_ratio, residual / (1e-8 * scale));
    if (residual > 1e-8 * scale) {
      return {false, "residual " + std::to_string(residual) + " on order " +
                         std::to_string(order)};
    }
  }

  for (int trial = 0; trial < 50; ++trial) {
    const NodeId n = 2 + static_cast<NodeId>(lfcd::uniform_below(rng, 199));
    const Graph g = oracle::random_graph(rng, n, 1.5 / static_cast<double>(n));
    const std::size_t components = lfcd::connected_components(g).size();
    const auto pairs = lfcd::eigen_smallest_k(lfcd::laplacian(g), n);
    std::size_t zeros = 0;
    for (double value : pairs.values) {
      if (std::abs(value) < 1e-6) ++zeros;
    }
    if (zeros != components) {
      return {false, "nullspace " + std::to_string(zeros) + " vs " +
                         std::to_string(components) + " components (n = " +
                         std::to_string(n) + ")"};
    }
  }
  std::ostringstream detail;
  detail << "50 matrices within bound (worst ratio " << worst_ratio
         << "), 50 Laplacian nullspaces exact";
  return {true, detail.str()};
}

// Criterion 7: the pair metric agrees with the definition taken literally,
// and carries its symmetry and relabel-invariance.
Outcome criterion_metric() {
  std::mt19937_64 rng(1004);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + lfcd::uniform_below(rng, 30);
    std::vector<std::uint32_t> a(n);
    std::vector<std::uint32_t> b(n);
    for (std::size_t v = 0; v < n; ++v) {
      a[v] = static_cast<std::uint32_t>(lfcd::uniform_below(rng, 6));
      b[v] = static_cast<std::uint32_t>(lfcd::uniform_below(rng, 6));
    }
    const Partition pa = lfcd::canonical_partition(a);
    const Partition pb = lfcd::canonical_partition(b);
    const std::uint64_t error = lfcd::pair_error(pa, pb);
    if (error != oracle::pair_error_by_matrix(pa, pb)) {
      return {false, "oracle mismatch on trial " + std::to_string(trial)};
    }
    if (error != lfcd::pair_error(pb, pa)) {
      return {false, "asymmetry on trial " + std::to_string(trial)};
    }
    if (lfcd::pair_error(pa, pa) != 0) {
      return {false, "identity not zero on trial " + std::to_string(trial)};
    }
    std::vector<std::uint32_t> relabeled(n);
    for (std::size_t v = 0; v < n; ++v) {
      relabeled[v] = 1000 - b[v] * 7;
    }
    if (lfcd::pair_error(pa, lfcd::canonical_partition(relabeled)) != error) {
      return {false, "relabel variance on trial " + std::to_string(trial)};
    }
  }
  return {true, "200 partition pairs against the matrix oracle"};
}

// Criterion 8: the complete compare pipeline is byte-deterministic across
// independent processes.
Outcome criterion_determinism(const std::string& cli_path) {
  const std::string flags =
      " compare --communities 10 --size-min 2 --size-max 30 --seeds 1..20"
      " --inter-edges 200,2000 --csv-out ";
  if (cli_path.empty()) {
    lfcd::CompareConfig config;
    config.communities = 10;
    config.size_min = 2;
    config.size_max = 30;
    config.seed_begin = 1;
    config.seed_end = 20;
    config.inter_edges = {200, 2000};
    const std::string first = lfcd::comparison_csv(lfcd::run_comparison(config));
    const std::string second =
        lfcd::comparison_csv(lfcd::run_comparison(config));
    return {first == second && !first.empty(),
            "no CLI path given; in-process pipeline compared"};
  }

  namespace fs = std::filesystem;
  const fs::path dir =
      fs::temp_directory_path() /
      ("lfcd_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const fs::path first = dir / "first.csv";
  const fs::path second = dir / "second.csv";
  Outcome outcome;
  for (int run = 0; run < 2; ++run) {
    const fs::path& target = run == 0 ? first : second;
    const std::string command =
        cli_path + flags + target.string() + " > /dev/null 2>&1";
    const int status = std::system(command.c_str());
    if (!WIFEXITED(status) || WEXITSTATUS(status) != 0) {
      outcome = {false, "CLI exited nonzero on run " + std::to_string(run)};
      std::error_code ec;
      fs::remove_all(dir, ec);
      return outcome;
    }
  }
  const auto slurp = [](const fs::path& path) {
    std::ifstream in(path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
  };
  const std::string a = slurp(first);
  const std::string b = slurp(second);
  std::error_code ec;
  fs::remove_all(dir, ec);
  if (a.empty() || a != b) {
    return {false, "CSV outputs differ between identical runs"};
  }
  return {true, "two CLI runs, byte-identical CSV (" +
                    std::to_string(a.size()) + " bytes)"};
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli_path = argc > 1 ? argv[1] : "";
  const std::vector<std::pair<std::string, std::function<Outcome()>>> table = {
      {"planted recovery is exact",
       [] { return criterion_planted_exactness(); }},
      {"spectral baseline degrades with density",
       [] { return criterion_detector_comparison(); }},
      {"centrality matches the all-pairs oracle",
       [] { return criterion_centrality_oracle(); }},
      {"planted centrality structure holds",
       [] { return criterion_planted_structure(); }},
      {"centrality cost scales like V*E",
       [] { return criterion_complexity(); }},
      {"eigensolver meets its residual bound",
       [] { return criterion_eigensolver(); }},
      {"pair metric matches its definition",
       [] { return criterion_metric(); }},
      {"compare pipeline is byte-deterministic",
       [&cli_path] { return criterion_determinism(cli_path); }},
  };

  int failures = 0;
  for (std::size_t i = 0; i < table.size(); ++i) {
    Outcome outcome;
    try {
      outcome = table[i].second();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    if (!outcome.pass) ++failures;
    std::cout << "criterion " << (i + 1) << " ["
              << (outcome.pass ? "PASS" : "FAIL") << "] " << table[i].first
              << ": " << outcome.detail << std::endl;
  }
  if (failures == 0) {
    std::cout << "all " << table.size() << " criteria passed" << std::endl;
  } else {
    std::cout << failures << " criteria failed" << std::endl;
  }
  return failures;
}
