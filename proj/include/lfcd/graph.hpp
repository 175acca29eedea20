#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lfcd/error.hpp"

namespace lfcd {

using NodeId = std::uint32_t;

// Simple undirected graph over nodes 0..n-1, stored as CSR with sorted
// adjacency. Immutable after construction.
class Graph {
 public:
  Graph() = default;

  // Duplicate edges and self-loops are silently dropped; an endpoint
  // outside [0, node_count) is an error.
  static Graph from_edges(NodeId node_count,
                          std::span<const std::pair<NodeId, NodeId>> edges);

  NodeId node_count() const {
    return offsets_.empty() ? 0 : static_cast<NodeId>(offsets_.size() - 1);
  }
  std::uint64_t edge_count() const { return edge_count_; }

  // v must be a valid node id.
  std::span<const NodeId> neighbors(NodeId v) const {
    return {neighbors_.data() + offsets_[v],
            static_cast<std::size_t>(offsets_[v + 1] - offsets_[v])};
  }
  NodeId degree(NodeId v) const {
    return static_cast<NodeId>(offsets_[v + 1] - offsets_[v]);
  }
  bool has_edge(NodeId u, NodeId v) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::uint64_t> offsets_;
  std::vector<NodeId> neighbors_;
  std::uint64_t edge_count_ = 0;
};

// Two-way mapping between external string labels and internal node ids.
struct NodeIdMap {
  std::unordered_map<std::string, NodeId> external_to_internal;
  std::vector<std::string> internal_to_external;

  // Labels "0".."n-1".
  static NodeIdMap identity(NodeId n);

  NodeId size() const {
    return static_cast<NodeId>(internal_to_external.size());
  }
};

struct LoadedGraph {
  Graph graph;
  NodeIdMap ids;
};

// Reads TAB-separated label pairs, one edge per line. Blank lines and lines
// starting with '#' are skipped. The node set is the set of labels seen, in
// first-appearance order; a graph with no nodes is an error.
LoadedGraph load_edge_list(std::istream& in);

// Writes one edge per line with endpoints in lexicographic order, lines
// sorted lexicographically. Isolated nodes are kept as self-loop lines so
// load_edge_list reconstructs the same graph.
void write_edge_list(std::ostream& out, const Graph& g, const NodeIdMap& ids);

// Components as sorted member lists, ordered by smallest member.
std::vector<std::vector<NodeId>> connected_components(const Graph& g);

// Subgraph induced by `nodes` (sorted ascending); node i of the result is
// nodes[i] of g. Edges leaving the set are dropped.
Graph induced_subgraph(const Graph& g, std::span<const NodeId> nodes);

}  // namespace lfcd
