#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace lfcd {

// One planted instance per (seed, inter_edges) cell; both detectors run on
// every cell, the spectral baseline with k fixed to whatever the
// leader-follower pass found.
struct CompareConfig {
  std::uint32_t communities = 0;
  std::uint32_t size_min = 0;
  std::uint32_t size_max = 0;
  std::uint64_t seed_begin = 0;
  std::uint64_t seed_end = 0;  // inclusive
  std::vector<std::uint64_t> inter_edges;
};

struct CompareRow {
  std::uint64_t seed = 0;
  std::uint64_t inter_edges = 0;
  std::uint32_t node_count = 0;
  std::uint32_t true_communities = 0;
  std::uint32_t lf_communities = 0;
  std::uint64_t lf_error = 0;
  std::uint64_t spectral_error = 0;
};

// Rows ordered by (seed, inter_edges).
std::vector<CompareRow> run_comparison(const CompareConfig& config);

// Header plus one line per row, LF line endings.
std::string comparison_csv(const std::vector<CompareRow>& rows);

}  // namespace lfcd
