#pragma once

#include <cstdint>
#include <vector>

#include "lfcd/centrality.hpp"
#include "lfcd/graph.hpp"
#include "lfcd/partition.hpp"

namespace lfcd {

enum class Role : std::uint8_t { Leader, Follower };

struct RoleLabeling {
  std::vector<Role> role;
  // Leaders ordered by ascending centrality, ties by ascending node id.
  std::vector<NodeId> leaders_sorted;
};

// Intermediate node -> owning-leader map produced by the assignment
// procedure; kUnassigned marks nodes not yet claimed.
struct Membership {
  static constexpr NodeId kUnassigned = 0xFFFFFFFFu;
  std::vector<NodeId> assignment;
};

// A node leads if some neighbor has strictly larger distance centrality.
RoleLabeling classify_roles(const Graph& g, const CentralityVector& dc);

// Full assignment procedure: leaders claim follower neighbors in centrality
// order, singleton leaders dissolve into the dominant neighboring community,
// and remaining nodes absorb the majority label of assigned neighbors until
// a fixpoint. Requires a connected graph (or one component of one).
Membership assign_membership(const Graph& g, const RoleLabeling& roles);
Partition assign_communities(const Graph& g, const RoleLabeling& roles);

// End-to-end detection; handles disconnected graphs by decomposing into
// components. Empty graphs are an error.
Partition detect(const Graph& g);

}  // namespace lfcd
