#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lfcd/graph.hpp"
#include "lfcd/partition.hpp"

namespace lfcd {

struct PlantedSpec {
  std::uint32_t num_communities = 0;
  std::uint32_t size_min = 0;
  std::uint32_t size_max = 0;
  std::uint64_t inter_edges = 0;
  std::uint64_t seed = 0;
  bool require_connected = true;
};

struct PlantedInstance {
  Graph graph;
  Partition truth;
  // One node per community guaranteed to have no cross-community edges.
  std::vector<NodeId> protected_followers;
};

// Disjoint cliques with uniformly drawn sizes, one protected follower per
// community, and exactly inter_edges distinct cross-community edges drawn
// uniformly among pairs of unprotected nodes. Identical specs produce
// identical instances on every platform.
PlantedInstance generate(const PlantedSpec& spec);

struct Violation {
  std::uint32_t community = 0;
  int property = 0;  // 1 = not a clique, 2 = no loyal follower
  std::string detail;
};

// Checks each alleged community for the two planted-model properties:
// internal completeness and at least one member with no outside neighbors.
std::vector<Violation> validate(const Graph& g, const Partition& truth);

}  // namespace lfcd
