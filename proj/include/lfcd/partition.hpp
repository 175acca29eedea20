#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "lfcd/graph.hpp"

namespace lfcd {

// Node -> community assignment with communities numbered 0..k-1 in order of
// ascending smallest member (the canonical numbering).
struct Partition {
  std::vector<std::uint32_t> community_of;
  std::uint32_t num_communities = 0;

  friend bool operator==(const Partition&, const Partition&) = default;
};

// Renumbers arbitrary community ids into canonical form.
Partition canonical_partition(const std::vector<std::uint32_t>& raw_ids);

// Members of each community, sorted ascending.
std::vector<std::vector<NodeId>> community_members(const Partition& p);

// One "label<TAB>community" line per node, sorted by label.
void write_partition(std::ostream& out, const Partition& p,
                     const NodeIdMap& ids);

// Parses the same format back; duplicate labels and malformed lines are
// errors. Community ids are taken as written.
std::map<std::string, std::uint32_t> read_partition(std::istream& in);

}  // namespace lfcd
