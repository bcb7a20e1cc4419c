#include "netsamp/walkers.hpp"

#include "netsamp/csv.hpp"

#include <algorithm>
#include <ostream>

namespace netsamp {

WalkerKind parse_walker_kind(std::string_view name) {
    if (name == "srw") return WalkerKind::Srw;
    if (name == "mhrw") return WalkerKind::Mhrw;
    if (name == "nbsrw") return WalkerKind::NbSrw;
    if (name == "cnrw") return WalkerKind::Cnrw;
    if (name == "gnrw") return WalkerKind::Gnrw;
    if (name == "nbcnrw") return WalkerKind::NbCnrw;
    throw ConfigError("unknown algorithm: " + std::string(name));
}

std::string_view walker_kind_name(WalkerKind kind) {
    switch (kind) {
    case WalkerKind::Srw: return "srw";
    case WalkerKind::Mhrw: return "mhrw";
    case WalkerKind::NbSrw: return "nbsrw";
    case WalkerKind::Cnrw: return "cnrw";
    case WalkerKind::Gnrw: return "gnrw";
    case WalkerKind::NbCnrw: return "nbcnrw";
    }
    return {};
}

void WalkerConfig::validate() const {
    if (kind == WalkerKind::Gnrw && !grouping)
        throw ConfigError("gnrw requires a grouping strategy");
}

std::string WalkerConfig::algorithm_label() const {
    return std::string(walker_kind_name(kind));
}

std::string WalkerConfig::grouping_label() const {
    return kind == WalkerKind::Gnrw && grouping ? grouping->label() : std::string{};
}

GroupedCirculation::GroupedCirculation(const NeighborPartition& partition) {
    pools.reserve(partition.size());
    for (const auto& members : partition) {
        pools.push_back({members, 0});
        total_size += static_cast<std::uint32_t>(members.size());
    }
    in_round.assign(pools.size(), 0);
}

NodeId GroupedCirculation::draw(Rng& rng, GroupWeighting weighting) {
    auto weight_of = [&](std::size_t i) -> std::uint64_t {
        if (in_round[i]) return 0;
        const auto size = static_cast<std::uint32_t>(pools[i].members.size());
        if (weighting == GroupWeighting::RemainingCount)
            return size - pools[i].consumed; // exhausted groups drop out
        return size;
    };

    std::uint64_t total_weight = 0;
    std::size_t candidates = 0, last_candidate = 0;
    auto tally = [&] {
        total_weight = 0;
        candidates = 0;
        for (std::size_t i = 0; i < pools.size(); ++i) {
            const std::uint64_t w = weight_of(i);
            if (w > 0) {
                total_weight += w;
                ++candidates;
                last_candidate = i;
            }
        }
    };
    tally();
    if (total_weight == 0) {
        // Round complete: every candidate group was chosen once. Start a new
        // round over whatever still has members to offer.
        std::fill(in_round.begin(), in_round.end(), 0);
        tally();
    }

    std::size_t gi = last_candidate;
    if (candidates > 1) { // a forced group costs no randomness
        std::uint64_t r = rng.bounded(total_weight);
        for (gi = 0;; ++gi) {
            const std::uint64_t w = weight_of(gi);
            if (r < w) break;
            r -= w;
        }
    }

    Pool& pool = pools[gi];
    const auto size = static_cast<std::uint32_t>(pool.members.size());
    const std::uint32_t j =
        pool.consumed + static_cast<std::uint32_t>(rng.bounded(size - pool.consumed));
    std::swap(pool.members[pool.consumed], pool.members[j]);
    const NodeId w = pool.members[pool.consumed];
    ++pool.consumed;
    in_round[gi] = 1;

    if (weighting == GroupWeighting::FullSize) {
        if (pool.consumed == size) pool.consumed = 0;
        if (std::find(in_round.begin(), in_round.end(), 0) == in_round.end())
            std::fill(in_round.begin(), in_round.end(), 0);
    } else {
        if (++total_consumed == total_size) {
            // Full pass over N(v): every neighbor came up exactly once.
            for (auto& p : pools) p.consumed = 0;
            total_consumed = 0;
            std::fill(in_round.begin(), in_round.end(), 0);
        }
    }
    return w;
}

Walker::Walker(const WalkerConfig& config, NodeId start, std::uint64_t seed)
    : config_(config), curr_(start), rng_(seed) {
    config_.validate();
}

NodeId Walker::step(AccessSession& session) {
    const auto nbrs = session.query(curr_);
    if (nbrs.empty()) throw Error("walk reached an isolated node");

    NodeId next = curr_;
    if (!prev_) {
        // Order-2 kinds take a plain uniform first step; so do SRW/MHRW by
        // definition (MHRW's first acceptance check needs a previous degree
        // only through the proposal, handled below).
        next = config_.kind == WalkerKind::Mhrw ? step_mhrw(session, nbrs)
                                                : step_uniform(nbrs);
    } else {
        switch (config_.kind) {
        case WalkerKind::Srw: next = step_uniform(nbrs); break;
        case WalkerKind::Mhrw: next = step_mhrw(session, nbrs); break;
        case WalkerKind::NbSrw: next = step_nbsrw(nbrs); break;
        case WalkerKind::Cnrw: next = step_cnrw(nbrs); break;
        case WalkerKind::NbCnrw: next = step_nbcnrw(nbrs); break;
        case WalkerKind::Gnrw: next = step_gnrw(session, nbrs); break;
        }
    }
    prev_ = curr_;
    curr_ = next;
    return next;
}

NodeId Walker::step_uniform(std::span<const NodeId> nbrs) {
    return nbrs[rng_.bounded(nbrs.size())];
}

NodeId Walker::step_mhrw(AccessSession& session, std::span<const NodeId> nbrs) {
    const NodeId proposal = nbrs[rng_.bounded(nbrs.size())];
    const auto k_curr = nbrs.size();
    const auto k_prop = session.query(proposal).size(); // charged like any query
    if (k_prop <= k_curr) return proposal;              // accept prob 1
    if (rng_.unit() < static_cast<double>(k_curr) / static_cast<double>(k_prop))
        return proposal;
    return curr_; // rejected: stay put
}

NodeId Walker::step_nbsrw(std::span<const NodeId> nbrs) {
    if (nbrs.size() == 1) return nbrs[0]; // forced backtrack
    const auto it = std::lower_bound(nbrs.begin(), nbrs.end(), *prev_);
    if (it == nbrs.end() || *it != *prev_) return step_uniform(nbrs);
    const auto prev_pos = static_cast<std::size_t>(it - nbrs.begin());
    std::size_t j = rng_.bounded(nbrs.size() - 1);
    if (j >= prev_pos) ++j;
    return nbrs[j];
}

NodeId Walker::step_cnrw(std::span<const NodeId> nbrs) {
    auto [it, inserted] = circulations_.try_emplace(key(*prev_, curr_));
    if (inserted) it->second.pool.assign(nbrs.begin(), nbrs.end());
    return it->second.draw(rng_);
}

NodeId Walker::step_nbcnrw(std::span<const NodeId> nbrs) {
    if (nbrs.size() == 1) return nbrs[0]; // base set would be empty
    auto [it, inserted] = circulations_.try_emplace(key(*prev_, curr_));
    if (inserted) {
        auto& pool = it->second.pool;
        pool.reserve(nbrs.size() - 1);
        for (NodeId w : nbrs)
            if (w != *prev_) pool.push_back(w);
    }
    return it->second.draw(rng_);
}

NodeId Walker::step_gnrw(AccessSession& session, std::span<const NodeId> nbrs) {
    const std::uint64_t k = key(*prev_, curr_);
    auto state_it = grouped_.find(k);
    if (state_it == grouped_.end()) {
        auto part_it = partitions_.find(curr_);
        if (part_it == partitions_.end()) {
            part_it = partitions_
                          .emplace(curr_, make_groups(*config_.grouping, curr_, nbrs, session))
                          .first;
        }
        state_it = grouped_.emplace(k, GroupedCirculation(part_it->second)).first;
    }
    return state_it->second.draw(rng_, config_.weighting);
}

std::optional<CirculationSnapshot> Walker::circulation(NodeId u, NodeId v) const {
    if (config_.kind == WalkerKind::Cnrw || config_.kind == WalkerKind::NbCnrw) {
        auto it = circulations_.find(key(u, v));
        if (it == circulations_.end()) return std::nullopt;
        const auto& c = it->second;
        CirculationSnapshot snap;
        snap.consumed.assign(c.pool.begin(), c.pool.begin() + c.consumed);
        snap.remaining.assign(c.pool.begin() + c.consumed, c.pool.end());
        std::sort(snap.consumed.begin(), snap.consumed.end());
        std::sort(snap.remaining.begin(), snap.remaining.end());
        return snap;
    }
    if (config_.kind == WalkerKind::Gnrw) {
        auto it = grouped_.find(key(u, v));
        if (it == grouped_.end()) return std::nullopt;
        CirculationSnapshot snap;
        for (const auto& pool : it->second.pools) {
            snap.consumed.insert(snap.consumed.end(), pool.members.begin(),
                                 pool.members.begin() + pool.consumed);
            snap.remaining.insert(snap.remaining.end(),
                                  pool.members.begin() + pool.consumed,
                                  pool.members.end());
        }
        std::sort(snap.consumed.begin(), snap.consumed.end());
        std::sort(snap.remaining.begin(), snap.remaining.end());
        return snap;
    }
    return std::nullopt;
}

Trace walk(const WalkerConfig& config, NodeId start, const WalkLimit& limit,
           AccessSession& session, std::uint64_t seed) {
    config.validate();
    if (!session.graph().contains(start)) throw UnknownNodeError(start);
    std::uint64_t max_steps;
    if (limit.budget_mode) {
        if (!session.budget())
            throw ConfigError("budget-mode walk needs a session with a budget");
        if (limit.step_cap_factor == 0)
            throw ConfigError("budget-mode walk needs a nonzero step cap factor");
        max_steps = *session.budget() * limit.step_cap_factor;
    } else {
        max_steps = limit.step_count;
    }

    Trace trace;
    trace.nodes.reserve(max_steps + 1);
    trace.queries_after.reserve(max_steps + 1);
    trace.nodes.push_back(start);
    trace.queries_after.push_back(session.unique_query_count());

    Walker walker(config, start, seed);
    while (trace.steps() < max_steps) {
        NodeId next;
        try {
            next = walker.step(session);
        } catch (const BudgetExhaustedError&) {
            trace.budget_terminated = true;
            break;
        }
        trace.nodes.push_back(next);
        trace.queries_after.push_back(session.unique_query_count());
    }
    return trace;
}

void write_trace_csv(std::ostream& out, const Trace& trace, const Graph& graph) {
    csv::write_record(out, {"step", "node_id", "unique_queries"});
    for (std::size_t t = 0; t < trace.nodes.size(); ++t)
        csv::write_record(out, {std::to_string(t), graph.original_id(trace.nodes[t]),
                                std::to_string(trace.queries_after[t])});
}

} // namespace netsamp
