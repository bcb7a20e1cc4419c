#pragma once

#include "netsamp/access.hpp"
#include "netsamp/types.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace netsamp {

// Deterministic partition of a node's neighbor list into disjoint,
// exhaustive, nonempty groups. Group order is canonical, so a group's index
// is a stable id for circulation bookkeeping.
using NeighborPartition = std::vector<std::vector<NodeId>>;

struct GroupingStrategy {
    enum class Kind { Hash, DegreeQuantile, Attribute };

    Kind kind = Kind::Hash;
    std::uint32_t group_count = 1; // m; bucket count for numeric attributes
    std::string attribute;         // Kind::Attribute only

    static GroupingStrategy by_hash(std::uint32_t m);
    static GroupingStrategy by_degree_quantile(std::uint32_t m);
    static GroupingStrategy by_attribute(std::string name, std::uint32_t m = 4);

    // "hash:2", "degree:3", "attr:age", "attr:age:4"
    static GroupingStrategy parse(std::string_view text);
    std::string label() const;
};

// Partition v's neighbors. ByHash buckets on a stable 64-bit hash (FNV-1a) of
// the original node id; ByDegreeQuantile sorts by degree and splits into m
// contiguous near-equal buckets (remainder to the earlier buckets);
// ByAttribute makes one group per category, or m quantile buckets for a
// numeric attribute. Neighbors missing the attribute form a dedicated group.
NeighborPartition make_groups(const GroupingStrategy& strategy, NodeId v,
                              std::span<const NodeId> neighbors,
                              const AccessSession& session);

} // namespace netsamp
