#include "lfcd/centrality.hpp"

#include <algorithm>

namespace lfcd {

namespace {
constexpr std::uint32_t kUnreached = 0xFFFFFFFFu;
}

std::vector<std::uint32_t> bfs_distances(const Graph& g, NodeId source) {
  const NodeId n = g.node_count();
  if (source >= n) {
    throw Error("bfs source " + std::to_string(source) +
                " out of range for node count " + std::to_string(n));
  }
  std::vector<std::uint32_t> dist(n, kUnreached);
  std::vector<NodeId> queue(n);
  std::size_t head = 0;
  std::size_t tail = 0;
  dist[source] = 0;
  queue[tail++] = source;
  while (head < tail) {
    const NodeId u = queue[head++];
    const std::uint32_t next = dist[u] + 1;
    for (NodeId v : g.neighbors(u)) {
      if (dist[v] == kUnreached) {
        dist[v] = next;
        queue[tail++] = v;
      }
    }
  }
  if (tail != n) {
    for (NodeId v = 0; v < n; ++v) {
      if (dist[v] == kUnreached) {
        throw Error("graph is disconnected: node " + std::to_string(v) +
                    " is unreachable from " + std::to_string(source));
      }
    }
  }
  return dist;
}

CentralityVector distance_centrality_all(const Graph& g) {
  const NodeId n = g.node_count();
  if (n == 0) throw Error("distance centrality of an empty graph");
  CentralityVector out(n, 0);
  std::vector<std::uint32_t> dist(n);
  std::vector<NodeId> queue(n);
  for (NodeId source = 0; source < n; ++source) {
    std::fill(dist.begin(), dist.end(), kUnreached);
    std::size_t head = 0;
    std::size_t tail = 0;
    dist[source] = 0;
    queue[tail++] = source;
    std::uint64_t sum = 0;
    while (head < tail) {
      const NodeId u = queue[head++];
      sum += dist[u];
      const std::uint32_t next = dist[u] + 1;
      for (NodeId v : g.neighbors(u)) {
        if (dist[v] == kUnreached) {
          dist[v] = next;
          queue[tail++] = v;
        }
      }
    }
    if (tail != n) {
      for (NodeId v = 0; v < n; ++v) {
        if (dist[v] == kUnreached) {
          throw Error("graph is disconnected: node " + std::to_string(v) +
                      " is unreachable from " + std::to_string(source));
        }
      }
    }
    out[source] = sum;
  }
  return out;
}

}  // namespace lfcd
