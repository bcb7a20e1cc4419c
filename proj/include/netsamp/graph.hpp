#pragma once

#include "netsamp/attributes.hpp"
#include "netsamp/types.hpp"

#include <cstdint>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace netsamp {

// Immutable undirected graph in CSR form. Adjacency lists are sorted
// ascending, carry no self-loops and no duplicates, and are symmetric:
// v in N(u) iff u in N(v). Safe for unrestricted concurrent reads.
class Graph {
public:
    // Edges may contain duplicates / both orientations; self-loops rejected
    // upstream. original_ids maps dense id -> source id string.
    static Graph build(std::size_t node_count,
                       std::vector<std::pair<NodeId, NodeId>> edges,
                       std::vector<std::string> original_ids);

    std::size_t node_count() const { return offsets_.size() - 1; }
    std::size_t edge_count() const { return edge_count_; }

    std::span<const NodeId> neighbors(NodeId v) const {
        return {adjacency_.data() + offsets_[v],
                adjacency_.data() + offsets_[v + 1]};
    }
    std::uint32_t degree(NodeId v) const {
        return static_cast<std::uint32_t>(offsets_[v + 1] - offsets_[v]);
    }
    bool has_edge(NodeId u, NodeId v) const;
    bool contains(NodeId v) const { return v < node_count(); }

    const std::string& original_id(NodeId v) const { return original_ids_[v]; }
    std::optional<NodeId> find_original(std::string_view id) const;

    const AttributeTable& attributes() const { return attributes_; }
    void attach_attributes(AttributeTable table);

private:
    Graph() = default;

    std::vector<std::uint64_t> offsets_;
    std::vector<NodeId> adjacency_;
    std::vector<std::string> original_ids_;
    std::unordered_map<std::string, NodeId> original_to_dense_;
    std::size_t edge_count_ = 0;
    AttributeTable attributes_;
};

// How a directed edge list is cast to an undirected graph: EITHER keeps an
// edge when at least one direction appears, MUTUAL only when both do.
enum class EdgePolicy { Either, Mutual };

// One "u v" pair per line; '#' starts a comment line; blank lines ignored.
// Self-loops and duplicate edges dropped. Throws ParseError with the line
// number on malformed input, Error when no edges survive.
Graph load_edge_list(std::istream& in, EdgePolicy policy);
Graph load_edge_list_file(const std::string& path, EdgePolicy policy);

// Induced subgraph on the largest connected component; ties broken in favor
// of the component containing the smallest node id. Node ids are re-densified
// and keep their original id strings.
Graph largest_connected_component(const Graph& g);

// Two complete graphs K_n1 (nodes 0..n1-1) and K_n2 (nodes n1..n1+n2-1)
// joined by the single bridge edge (n1-1, n1). Requires n1, n2 >= 2.
Graph gen_barbell(std::size_t n1, std::size_t n2);
inline std::pair<NodeId, NodeId> barbell_bridge(std::size_t n1) {
    return {static_cast<NodeId>(n1 - 1), static_cast<NodeId>(n1)};
}

// Complete graphs of the given sizes chained by one bridge edge between the
// lowest-id node of consecutive clusters. Requires every size >= 2.
Graph gen_clustered(std::span<const std::size_t> sizes);

// pi(v) = degree(v) / (2|E|). Requires |E| >= 1.
std::vector<double> true_stationary(const Graph& g);

} // namespace netsamp
