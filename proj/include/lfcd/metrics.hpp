#pragma once

#include <cstdint>
#include <string>

#include "lfcd/partition.hpp"

namespace lfcd {

// Number of unordered node pairs grouped together in exactly one of the two
// partitions. Zero iff the partitions agree up to community relabeling.
std::uint64_t pair_error(const Partition& truth, const Partition& pred);

struct ScoreReport {
  std::uint64_t pair_error = 0;
  std::uint32_t pred_communities = 0;
  std::uint32_t true_communities = 0;
  std::uint32_t node_count = 0;
};

ScoreReport score(const Partition& truth, const Partition& pred);

// "pair_error=<int> pred_k=<int> true_k=<int> n=<int>"
std::string format_score(const ScoreReport& report);

}  // namespace lfcd
