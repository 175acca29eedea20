#include "lfcd/planted.hpp"

#include <algorithm>
#include <random>
#include <utility>

#include "lfcd/rng.hpp"

namespace lfcd {

PlantedInstance generate(const PlantedSpec& spec) {
  if (spec.num_communities == 0) {
    throw Error("planted model needs at least one community");
  }
  if (spec.size_min < 2) {
    throw Error("community size_min must be at least 2");
  }
  if (spec.size_min > spec.size_max) {
    throw Error("community size_min exceeds size_max");
  }

  const std::uint32_t k = spec.num_communities;
  std::mt19937_64 rng(spec.seed);
  constexpr int kMaxAttempts = 1000;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    // Fixed draw order: sizes, then protected followers, then cross edges.
    // Changing it would silently change every seeded instance.
    std::vector<std::uint32_t> sizes(k);
    const std::uint64_t span = spec.size_max - spec.size_min + 1;
    for (std::uint32_t c = 0; c < k; ++c) {
      sizes[c] =
          spec.size_min + static_cast<std::uint32_t>(uniform_below(rng, span));
    }
    std::vector<NodeId> offsets(k + 1, 0);
    for (std::uint32_t c = 0; c < k; ++c) offsets[c + 1] = offsets[c] + sizes[c];
    const NodeId n = offsets[k];

    std::vector<NodeId> protected_followers(k);
    for (std::uint32_t c = 0; c < k; ++c) {
      protected_followers[c] =
          offsets[c] + static_cast<NodeId>(uniform_below(rng, sizes[c]));
    }

    std::vector<std::vector<NodeId>> unprotected(k);
    for (std::uint32_t c = 0; c < k; ++c) {
      for (NodeId v = offsets[c]; v < offsets[c + 1]; ++v) {
        if (v != protected_followers[c]) unprotected[c].push_back(v);
      }
    }
    std::vector<std::pair<NodeId, NodeId>> cross;
    for (std::uint32_t a = 0; a < k; ++a) {
      for (std::uint32_t b = a + 1; b < k; ++b) {
        for (NodeId u : unprotected[a]) {
          for (NodeId v : unprotected[b]) {
            cross.emplace_back(u, v);
          }
        }
      }
    }
    if (spec.inter_edges > cross.size()) {
      // Judged against the first size draw this is a caller error; on
      // connectivity retries it just means this redraw came up too small.
      if (attempt == 0) {
        throw Error("inter_edges = " + std::to_string(spec.inter_edges) +
                    " exceeds the " + std::to_string(cross.size()) +
                    " cross-community pairs available for the drawn sizes");
      }
      continue;
    }
    // Partial Fisher-Yates: the first inter_edges entries become a uniform
    // sample without replacement.
    for (std::uint64_t i = 0; i < spec.inter_edges; ++i) {
      const std::uint64_t j = i + uniform_below(rng, cross.size() - i);
      std::swap(cross[i], cross[j]);
    }

    std::vector<std::pair<NodeId, NodeId>> edges;
    for (std::uint32_t c = 0; c < k; ++c) {
      for (NodeId u = offsets[c]; u < offsets[c + 1]; ++u) {
        for (NodeId v = u + 1; v < offsets[c + 1]; ++v) {
          edges.emplace_back(u, v);
        }
      }
    }
    edges.insert(edges.end(), cross.begin(),
                 cross.begin() + static_cast<std::ptrdiff_t>(spec.inter_edges));

    PlantedInstance instance;
    instance.graph = Graph::from_edges(n, edges);
    instance.truth.community_of.resize(n);
    for (std::uint32_t c = 0; c < k; ++c) {
      for (NodeId v = offsets[c]; v < offsets[c + 1]; ++v) {
        instance.truth.community_of[v] = c;
      }
    }
    instance.truth.num_communities = k;
    instance.protected_followers = std::move(protected_followers);

    if (!spec.require_connected ||
        connected_components(instance.graph).size() == 1) {
      return instance;
    }
  }
  throw Error("no connected instance within " + std::to_string(kMaxAttempts) +
              " attempts; raise inter_edges or allow disconnected output");
}

std::vector<Violation> validate(const Graph& g, const Partition& truth) {
  if (truth.community_of.size() != g.node_count()) {
    throw Error("partition covers " +
                std::to_string(truth.community_of.size()) +
                " nodes but graph has " + std::to_string(g.node_count()));
  }
  std::vector<Violation> violations;
  const auto members = community_members(truth);
  for (std::uint32_t c = 0; c < truth.num_communities; ++c) {
    const auto& nodes = members[c];
    bool complete = true;
    for (std::size_t i = 0; i < nodes.size() && complete; ++i) {
      for (std::size_t j = i + 1; j < nodes.size(); ++j) {
        if (!g.has_edge(nodes[i], nodes[j])) {
          violations.push_back(
              {c, 1,
               "missing edge (" + std::to_string(nodes[i]) + ", " +
                   std::to_string(nodes[j]) + ")"});
          complete = false;
          break;
        }
      }
    }
    bool has_loyal = false;
    for (NodeId v : nodes) {
      bool loyal = true;
      for (NodeId u : g.neighbors(v)) {
        if (truth.community_of[u] != c) {
          loyal = false;
          break;
        }
      }
      if (loyal) {
        has_loyal = true;
        break;
      }
    }
    if (!has_loyal) {
      violations.push_back(
          {c, 2, "every member has a neighbor outside the community"});
    }
  }
  return violations;
}

}  // namespace lfcd
