#include "lfcd/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>

namespace lfcd {

Graph Graph::from_edges(NodeId node_count,
                        std::span<const std::pair<NodeId, NodeId>> edges) {
  std::vector<std::pair<NodeId, NodeId>> pairs;
  pairs.reserve(edges.size());
  for (const auto& [u, v] : edges) {
    if (u >= node_count || v >= node_count) {
      throw Error("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                  "): endpoint out of range for node count " +
                  std::to_string(node_count));
    }
    if (u == v) continue;
    pairs.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());

  Graph g;
  g.edge_count_ = pairs.size();
  std::vector<NodeId> degree(node_count, 0);
  for (const auto& [u, v] : pairs) {
    ++degree[u];
    ++degree[v];
  }
  g.offsets_.assign(node_count + 1, 0);
  for (NodeId v = 0; v < node_count; ++v) {
    g.offsets_[v + 1] = g.offsets_[v] + degree[v];
  }
  g.neighbors_.resize(g.offsets_[node_count]);
  std::vector<std::uint64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  // Pairs are sorted with u < v, so each adjacency list fills in
  // ascending order.
  for (const auto& [u, v] : pairs) {
    g.neighbors_[cursor[u]++] = v;
    g.neighbors_[cursor[v]++] = u;
  }
  return g;
}

bool Graph::has_edge(NodeId u, NodeId v) const {
  const auto adj = neighbors(u);
  return std::binary_search(adj.begin(), adj.end(), v);
}

NodeIdMap NodeIdMap::identity(NodeId n) {
  NodeIdMap ids;
  ids.internal_to_external.reserve(n);
  for (NodeId v = 0; v < n; ++v) {
    ids.internal_to_external.push_back(std::to_string(v));
    ids.external_to_internal.emplace(ids.internal_to_external.back(), v);
  }
  return ids;
}

LoadedGraph load_edge_list(std::istream& in) {
  NodeIdMap ids;
  std::vector<std::pair<NodeId, NodeId>> edges;
  std::string line;
  std::uint64_t line_no = 0;

  const auto intern = [&ids](std::string label) {
    const auto next = static_cast<NodeId>(ids.internal_to_external.size());
    const auto [it, inserted] =
        ids.external_to_internal.try_emplace(std::move(label), next);
    if (inserted) ids.internal_to_external.push_back(it->first);
    return it->second;
  };

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos || tab == 0 || tab + 1 == line.size() ||
        line.find('\t', tab + 1) != std::string::npos) {
      throw Error("line " + std::to_string(line_no) +
                  ": expected exactly two TAB-separated labels");
    }
    const NodeId u = intern(line.substr(0, tab));
    const NodeId v = intern(line.substr(tab + 1));
    edges.emplace_back(u, v);
  }
  if (ids.internal_to_external.empty()) {
    throw Error("edge list defines no nodes");
  }
  LoadedGraph out;
  out.graph = Graph::from_edges(
      static_cast<NodeId>(ids.internal_to_external.size()), edges);
  out.ids = std::move(ids);
  return out;
}

void write_edge_list(std::ostream& out, const Graph& g, const NodeIdMap& ids) {
  if (ids.size() != g.node_count()) {
    throw Error("node id map covers " + std::to_string(ids.size()) +
                " nodes but graph has " + std::to_string(g.node_count()));
  }
  std::vector<std::pair<std::string, std::string>> lines;
  lines.reserve(g.edge_count());
  for (NodeId u = 0; u < g.node_count(); ++u) {
    if (g.degree(u) == 0) {
      lines.emplace_back(ids.internal_to_external[u],
                         ids.internal_to_external[u]);
      continue;
    }
    for (NodeId v : g.neighbors(u)) {
      if (v < u) continue;
      const std::string& a = ids.internal_to_external[u];
      const std::string& b = ids.internal_to_external[v];
      lines.emplace_back(std::min(a, b), std::max(a, b));
    }
  }
  std::sort(lines.begin(), lines.end());
  for (const auto& [a, b] : lines) {
    out << a << '\t' << b << '\n';
  }
}

std::vector<std::vector<NodeId>> connected_components(const Graph& g) {
  const NodeId n = g.node_count();
  std::vector<std::vector<NodeId>> components;
  std::vector<bool> seen(n, false);
  std::vector<NodeId> stack;
  for (NodeId start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<NodeId> members;
    seen[start] = true;
    stack.push_back(start);
    while (!stack.empty()) {
      const NodeId u = stack.back();
      stack.pop_back();
      members.push_back(u);
      for (NodeId v : g.neighbors(u)) {
        if (!seen[v]) {
          seen[v] = true;
          stack.push_back(v);
        }
      }
    }
    std::sort(members.begin(), members.end());
    components.push_back(std::move(members));
  }
  return components;
}

Graph induced_subgraph(const Graph& g, std::span<const NodeId> nodes) {
  constexpr NodeId kOutside = 0xFFFFFFFFu;
  std::vector<NodeId> local(g.node_count(), kOutside);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    local[nodes[i]] = static_cast<NodeId>(i);
  }
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (NodeId u : nodes) {
    for (NodeId v : g.neighbors(u)) {
      if (v > u && local[v] != kOutside) {
        edges.emplace_back(local[u], local[v]);
      }
    }
  }
  return Graph::from_edges(static_cast<NodeId>(nodes.size()), edges);
}

}  // namespace lfcd
