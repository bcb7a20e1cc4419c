#include "netsamp/access.hpp"

#include <thread>

namespace netsamp {

AccessSession::AccessSession(const Graph& graph, std::optional<std::uint64_t> budget,
                             std::chrono::microseconds per_query_delay)
    : graph_(&graph),
      cached_(graph.node_count(), 0),
      budget_(budget),
      per_query_delay_(per_query_delay) {}

std::span<const NodeId> AccessSession::query(NodeId v) {
    if (!graph_->contains(v)) throw UnknownNodeError(v);
    if (!cached_[v]) {
        if (budget_ && unique_queries_ == *budget_) throw BudgetExhaustedError();
        if (per_query_delay_.count() > 0) std::this_thread::sleep_for(per_query_delay_);
        cached_[v] = 1;
        ++unique_queries_;
    }
    return graph_->neighbors(v);
}

std::optional<double> AccessSession::attribute_numeric(NodeId v,
                                                       std::string_view name) const {
    if (!graph_->contains(v)) throw UnknownNodeError(v);
    return graph_->attributes().numeric(name, v);
}

std::optional<std::int32_t> AccessSession::attribute_category(NodeId v,
                                                              std::string_view name) const {
    if (!graph_->contains(v)) throw UnknownNodeError(v);
    return graph_->attributes().category(name, v);
}

const std::string& AccessSession::original_id(NodeId v) const {
    if (!graph_->contains(v)) throw UnknownNodeError(v);
    return graph_->original_id(v);
}

std::uint32_t AccessSession::peek_degree(NodeId v) const {
    if (!graph_->contains(v)) throw UnknownNodeError(v);
    return graph_->degree(v);
}

std::optional<double> AccessSession::peek_numeric(NodeId v, std::string_view name) const {
    return attribute_numeric(v, name);
}

std::optional<std::int32_t> AccessSession::peek_category(NodeId v,
                                                         std::string_view name) const {
    return attribute_category(v, name);
}

} // namespace netsamp
