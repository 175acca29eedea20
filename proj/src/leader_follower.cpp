#include "lfcd/leader_follower.hpp"

#include <algorithm>
#include <unordered_map>

namespace lfcd {

namespace {

// Most frequent community id; ties go to the smallest id.
NodeId pick_majority(const std::unordered_map<NodeId, std::uint32_t>& counts) {
  NodeId best = 0;
  std::uint32_t best_count = 0;
  bool first = true;
  for (const auto& [id, count] : counts) {
    if (first || count > best_count ||
        (count == best_count && id < best)) {
      best = id;
      best_count = count;
      first = false;
    }
  }
  return best;
}

}  // namespace

RoleLabeling classify_roles(const Graph& g, const CentralityVector& dc) {
  const NodeId n = g.node_count();
  if (dc.size() != n) {
    throw Error("centrality vector covers " + std::to_string(dc.size()) +
                " nodes but graph has " + std::to_string(n));
  }
  RoleLabeling out;
  out.role.assign(n, Role::Follower);
  for (NodeId v = 0; v < n; ++v) {
    for (NodeId u : g.neighbors(v)) {
      if (dc[v] < dc[u]) {
        out.role[v] = Role::Leader;
        break;
      }
    }
  }
  for (NodeId v = 0; v < n; ++v) {
    if (out.role[v] == Role::Leader) out.leaders_sorted.push_back(v);
  }
  std::sort(out.leaders_sorted.begin(), out.leaders_sorted.end(),
            [&dc](NodeId a, NodeId b) {
              return dc[a] != dc[b] ? dc[a] < dc[b] : a < b;
            });
  return out;
}

Membership assign_membership(const Graph& g, const RoleLabeling& roles) {
  const NodeId n = g.node_count();
  if (roles.role.size() != n) {
    throw Error("role labeling covers " + std::to_string(roles.role.size()) +
                " nodes but graph has " + std::to_string(n));
  }
  Membership m;
  m.assignment.assign(n, Membership::kUnassigned);

  if (roles.leaders_sorted.empty()) {
    // No centrality gradient anywhere: the component is one community and
    // its smallest node stands in as the representative.
    std::fill(m.assignment.begin(), m.assignment.end(), NodeId{0});
    return m;
  }

  for (NodeId leader : roles.leaders_sorted) m.assignment[leader] = leader;

  // Seeding round: each leader, strongest first, claims the follower
  // neighbors nobody has taken yet.
  std::vector<std::uint32_t> community_size(n, 0);
  for (NodeId leader : roles.leaders_sorted) community_size[leader] = 1;
  for (NodeId leader : roles.leaders_sorted) {
    for (NodeId v : g.neighbors(leader)) {
      if (roles.role[v] == Role::Follower &&
          m.assignment[v] == Membership::kUnassigned) {
        m.assignment[v] = leader;
        ++community_size[leader];
      }
    }
  }

  // Leaders that claimed nobody dissolve, in the same order, into the
  // community their follower neighbors chose; if they have none, into the
  // majority community of all neighbors, not counting communities that are
  // themselves still waiting to dissolve. A leader whose neighborhood offers
  // no settled community at all reverts to unassigned and is picked up by
  // the residual sweeps below.
  std::vector<bool> pending(n, false);
  std::vector<NodeId> singletons;
  for (NodeId leader : roles.leaders_sorted) {
    if (community_size[leader] == 1) {
      pending[leader] = true;
      singletons.push_back(leader);
    }
  }
  std::unordered_map<NodeId, std::uint32_t> counts;
  for (NodeId leader : singletons) {
    counts.clear();
    for (NodeId v : g.neighbors(leader)) {
      if (roles.role[v] == Role::Follower &&
          m.assignment[v] != Membership::kUnassigned) {
        ++counts[m.assignment[v]];
      }
    }
    if (counts.empty()) {
      for (NodeId v : g.neighbors(leader)) {
        const NodeId target = m.assignment[v];
        if (target == Membership::kUnassigned || pending[target]) continue;
        ++counts[target];
      }
    }
    pending[leader] = false;
    community_size[leader] = 0;
    if (counts.empty()) {
      m.assignment[leader] = Membership::kUnassigned;
      continue;
    }
    const NodeId target = pick_majority(counts);
    m.assignment[leader] = target;
    ++community_size[target];
  }

  // Residual sweeps: unassigned nodes take the majority community among
  // their assigned neighbors. Each sweep reads a snapshot so the outcome
  // does not depend on iteration order within the sweep.
  std::vector<NodeId> unassigned;
  for (NodeId v = 0; v < n; ++v) {
    if (m.assignment[v] == Membership::kUnassigned) unassigned.push_back(v);
  }
  while (!unassigned.empty()) {
    const std::vector<NodeId> snapshot = m.assignment;
    std::vector<NodeId> still_unassigned;
    for (NodeId v : unassigned) {
      counts.clear();
      for (NodeId u : g.neighbors(v)) {
        if (snapshot[u] != Membership::kUnassigned) ++counts[snapshot[u]];
      }
      if (counts.empty()) {
        still_unassigned.push_back(v);
        continue;
      }
      m.assignment[v] = pick_majority(counts);
    }
    if (still_unassigned.size() == unassigned.size()) {
      throw Error("assignment cannot reach all nodes: graph is disconnected");
    }
    unassigned = std::move(still_unassigned);
  }
  return m;
}

Partition assign_communities(const Graph& g, const RoleLabeling& roles) {
  return canonical_partition(assign_membership(g, roles).assignment);
}

Partition detect(const Graph& g) {
  const NodeId n = g.node_count();
  if (n == 0) throw Error("cannot detect communities in an empty graph");
  const auto components = connected_components(g);
  std::vector<std::uint32_t> raw(n, 0);
  std::uint32_t next = 0;
  for (const auto& component : components) {
    if (component.size() == 1) {
      raw[component[0]] = next++;
      continue;
    }
    const Graph sub = induced_subgraph(g, component);
    const CentralityVector dc = distance_centrality_all(sub);
    const Partition local = assign_communities(sub, classify_roles(sub, dc));
    for (std::size_t i = 0; i < component.size(); ++i) {
      raw[component[i]] = next + local.community_of[i];
    }
    next += local.num_communities;
  }
  return canonical_partition(raw);
}

}  // namespace lfcd
