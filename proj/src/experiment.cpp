#include "lfcd/experiment.hpp"

#include <algorithm>

#include "lfcd/leader_follower.hpp"
#include "lfcd/metrics.hpp"
#include "lfcd/planted.hpp"
#include "lfcd/spectral.hpp"

namespace lfcd {

std::vector<CompareRow> run_comparison(const CompareConfig& config) {
  if (config.seed_begin > config.seed_end) {
    throw Error("seed range is empty");
  }
  if (config.inter_edges.empty()) {
    throw Error("no inter-edge counts given");
  }
  std::vector<std::uint64_t> densities = config.inter_edges;
  std::sort(densities.begin(), densities.end());

  std::vector<CompareRow> rows;
  rows.reserve((config.seed_end - config.seed_begin + 1) * densities.size());
  for (std::uint64_t seed = config.seed_begin; seed <= config.seed_end;
       ++seed) {
    for (std::uint64_t inter : densities) {
      PlantedSpec spec;
      spec.num_communities = config.communities;
      spec.size_min = config.size_min;
      spec.size_max = config.size_max;
      spec.inter_edges = inter;
      spec.seed = seed;
      spec.require_connected = true;
      const PlantedInstance instance = generate(spec);

      const Partition lf = detect(instance.graph);
      const Partition sp =
          spectral_cluster(instance.graph, lf.num_communities, seed);

      CompareRow row;
      row.seed = seed;
      row.inter_edges = inter;
      row.node_count = instance.graph.node_count();
      row.true_communities = instance.truth.num_communities;
      row.lf_communities = lf.num_communities;
      row.lf_error = pair_error(instance.truth, lf);
      row.spectral_error = pair_error(instance.truth, sp);
      rows.push_back(row);
    }
  }
  return rows;
}

std::string comparison_csv(const std::vector<CompareRow>& rows) {
  std::string out = "seed,inter_edges,n,true_k,lf_k,lf_error,spectral_error\n";
  for (const CompareRow& row : rows) {
    out += std::to_string(row.seed) + ',' + std::to_string(row.inter_edges) +
           ',' + std::to_string(row.node_count) + ',' +
           std::to_string(row.true_communities) + ',' +
           std::to_string(row.lf_communities) + ',' +
           std::to_string(row.lf_error) + ',' +
           std::to_string(row.spectral_error) + '\n';
  }
  return out;
}

}  // namespace lfcd
