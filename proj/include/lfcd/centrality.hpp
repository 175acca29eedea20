#pragma once

#include <cstdint>
#include <vector>

#include "lfcd/graph.hpp"

namespace lfcd {

using CentralityVector = std::vector<std::uint64_t>;

// Hop distances from source to every node. Unreachable nodes are an error;
// callers decompose into components first.
std::vector<std::uint32_t> bfs_distances(const Graph& g, NodeId source);

// Distance centrality D(u) = sum over v of d(u, v), for every u. Exact
// integer sums; requires a connected, non-empty graph.
CentralityVector distance_centrality_all(const Graph& g);

}  // namespace lfcd
