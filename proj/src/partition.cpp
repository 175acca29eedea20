#include "lfcd/partition.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <unordered_map>

namespace lfcd {

Partition canonical_partition(const std::vector<std::uint32_t>& raw_ids) {
  Partition p;
  p.community_of.resize(raw_ids.size());
  std::unordered_map<std::uint32_t, std::uint32_t> renumber;
  for (std::size_t v = 0; v < raw_ids.size(); ++v) {
    const auto next = static_cast<std::uint32_t>(renumber.size());
    const auto [it, inserted] = renumber.try_emplace(raw_ids[v], next);
    p.community_of[v] = it->second;
  }
  p.num_communities = static_cast<std::uint32_t>(renumber.size());
  return p;
}

std::vector<std::vector<NodeId>> community_members(const Partition& p) {
  std::vector<std::vector<NodeId>> members(p.num_communities);
  for (std::size_t v = 0; v < p.community_of.size(); ++v) {
    members[p.community_of[v]].push_back(static_cast<NodeId>(v));
  }
  return members;
}

void write_partition(std::ostream& out, const Partition& p,
                     const NodeIdMap& ids) {
  if (ids.size() != p.community_of.size()) {
    throw Error("node id map covers " + std::to_string(ids.size()) +
                " nodes but partition has " +
                std::to_string(p.community_of.size()));
  }
  std::vector<std::pair<std::string, std::uint32_t>> lines;
  lines.reserve(p.community_of.size());
  for (std::size_t v = 0; v < p.community_of.size(); ++v) {
    lines.emplace_back(ids.internal_to_external[v], p.community_of[v]);
  }
  std::sort(lines.begin(), lines.end());
  for (const auto& [label, community] : lines) {
    out << label << '\t' << community << '\n';
  }
}

std::map<std::string, std::uint32_t> read_partition(std::istream& in) {
  std::map<std::string, std::uint32_t> out;
  std::string line;
  std::uint64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos || tab == 0 || tab + 1 == line.size() ||
        line.find('\t', tab + 1) != std::string::npos) {
      throw Error("line " + std::to_string(line_no) +
                  ": expected exactly two TAB-separated fields");
    }
    std::string label = line.substr(0, tab);
    std::uint32_t community = 0;
    const char* begin = line.data() + tab + 1;
    const char* end = line.data() + line.size();
    const auto [ptr, ec] = std::from_chars(begin, end, community);
    if (ec != std::errc{} || ptr != end) {
      throw Error("line " + std::to_string(line_no) +
                  ": community id is not an unsigned integer");
    }
    if (!out.emplace(std::move(label), community).second) {
      throw Error("line " + std::to_string(line_no) + ": duplicate label");
    }
  }
  if (out.empty()) throw Error("partition file defines no nodes");
  return out;
}

}  // namespace lfcd
