#pragma once

#include "netsamp/graph.hpp"
#include "netsamp/types.hpp"

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace netsamp {

// Restricted-access gateway over a Graph. Walkers see the graph only through
// query(): the neighbor list and attributes of one node at a time. The first
// query of a node costs one unit against the optional budget; repeats are
// served from the cache for free. A session belongs to a single walker;
// separate sessions over the same Graph may run concurrently.
class AccessSession {
public:
    explicit AccessSession(const Graph& graph,
                           std::optional<std::uint64_t> budget = std::nullopt,
                           std::chrono::microseconds per_query_delay = {});

    // Neighbor list of v (sorted). Throws UnknownNodeError for an id outside
    // the graph and BudgetExhaustedError when v is uncached and the budget is
    // already spent.
    std::span<const NodeId> query(NodeId v);

    // Attributes of a node previously returned by query().
    std::optional<double> attribute_numeric(NodeId v, std::string_view name) const;
    std::optional<std::int32_t> attribute_category(NodeId v, std::string_view name) const;

    // Would query(v) cost a unit right now?
    bool cached(NodeId v) const { return v < cached_.size() && cached_[v]; }

    std::uint64_t unique_query_count() const { return unique_queries_; }
    std::optional<std::uint64_t> budget() const { return budget_; }

    // Summary lookups for nodes visible in a returned neighbor list (the
    // id / degree / profile preview shown next to a friend entry). Not charged.
    const std::string& original_id(NodeId v) const;
    std::uint32_t peek_degree(NodeId v) const;
    std::optional<double> peek_numeric(NodeId v, std::string_view name) const;
    std::optional<std::int32_t> peek_category(NodeId v, std::string_view name) const;

    const Graph& graph() const { return *graph_; }

private:
    const Graph* graph_;
    std::vector<std::uint8_t> cached_;
    std::uint64_t unique_queries_ = 0;
    std::optional<std::uint64_t> budget_;
    std::chrono::microseconds per_query_delay_;
};

} // namespace netsamp
