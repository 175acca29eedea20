#include "lfcd/metrics.hpp"

#include <unordered_map>

namespace lfcd {

namespace {

std::uint64_t pairs_within(const std::unordered_map<std::uint64_t,
                                                    std::uint64_t>& sizes) {
  std::uint64_t total = 0;
  for (const auto& [key, count] : sizes) {
    total += count * (count - 1) / 2;
  }
  return total;
}

}  // namespace

std::uint64_t pair_error(const Partition& truth, const Partition& pred) {
  const std::size_t n = truth.community_of.size();
  if (pred.community_of.size() != n) {
    throw Error("partitions cover different node sets (" + std::to_string(n) +
                " vs " + std::to_string(pred.community_of.size()) + " nodes)");
  }
  // Count co-grouped pairs in truth, in pred, and in both (via the joint
  // contingency cells); the symmetric difference follows by inclusion-
  // exclusion without touching all n^2 pairs.
  std::unordered_map<std::uint64_t, std::uint64_t> in_truth;
  std::unordered_map<std::uint64_t, std::uint64_t> in_pred;
  std::unordered_map<std::uint64_t, std::uint64_t> joint;
  for (std::size_t v = 0; v < n; ++v) {
    const std::uint64_t t = truth.community_of[v];
    const std::uint64_t p = pred.community_of[v];
    ++in_truth[t];
    ++in_pred[p];
    ++joint[t << 32 | p];
  }
  return pairs_within(in_truth) + pairs_within(in_pred) -
         2 * pairs_within(joint);
}

ScoreReport score(const Partition& truth, const Partition& pred) {
  ScoreReport report;
  report.pair_error = pair_error(truth, pred);
  report.pred_communities = pred.num_communities;
  report.true_communities = truth.num_communities;
  report.node_count = static_cast<std::uint32_t>(truth.community_of.size());
  return report;
}

std::string format_score(const ScoreReport& report) {
  return "pair_error=" + std::to_string(report.pair_error) +
         " pred_k=" + std::to_string(report.pred_communities) +
         " true_k=" + std::to_string(report.true_communities) +
         " n=" + std::to_string(report.node_count);
}

}  // namespace lfcd
