#pragma once

#include "netsamp/access.hpp"
#include "netsamp/grouping.hpp"
#include "netsamp/rng.hpp"
#include "netsamp/types.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace netsamp {

enum class WalkerKind { Srw, Mhrw, NbSrw, Cnrw, Gnrw, NbCnrw };

WalkerKind parse_walker_kind(std::string_view name); // "srw", "mhrw", ...
std::string_view walker_kind_name(WalkerKind kind);

// How GNRW weighs candidate groups within a round: RemainingCount picks a
// group with probability proportional to its not-yet-attempted members and
// lets every full pass over N(v) enumerate each neighbor exactly once
// (preserves the degree-proportional stationary distribution for any group
// sizes). FullSize weighs by |S_i| with per-group resets; kept selectable
// because it circulates strata fully independently, but it skews the
// stationary distribution when group sizes are unequal.
enum class GroupWeighting { RemainingCount, FullSize };

struct WalkerConfig {
    WalkerKind kind = WalkerKind::Srw;
    std::optional<GroupingStrategy> grouping; // required for Gnrw
    GroupWeighting weighting = GroupWeighting::RemainingCount;

    void validate() const;
    std::string algorithm_label() const; // "srw".."nbcnrw"
    std::string grouping_label() const;  // "" or "hash:2" etc.
};

// Node sequence X_0..X_n plus the session's unique-query count right after
// each node was appended. MHRW may repeat the current node on a rejected
// proposal; every other walker moves along an edge each step.
struct Trace {
    std::vector<NodeId> nodes;
    std::vector<std::uint64_t> queries_after;
    bool budget_terminated = false;

    std::size_t steps() const { return nodes.empty() ? 0 : nodes.size() - 1; }
};

// Incremental sampling-without-replacement over a fixed candidate pool. The
// consumed prefix of `pool` is the b(u,v) history set; a draw that fills the
// pool immediately starts a fresh pass, so each completed pass is a uniform
// random permutation of the pool.
struct Circulation {
    std::vector<NodeId> pool;
    std::uint32_t consumed = 0;

    NodeId draw(Rng& rng) {
        const auto size = static_cast<std::uint32_t>(pool.size());
        const std::uint32_t j =
            consumed + static_cast<std::uint32_t>(rng.bounded(size - consumed));
        std::swap(pool[consumed], pool[j]);
        NodeId w = pool[consumed];
        if (++consumed == size) consumed = 0;
        return w;
    }
};

// Per-(u,v) state for GNRW: one member pool per group plus the set of groups
// already chosen in the current round (the S(u,v) history).
struct GroupedCirculation {
    struct Pool {
        std::vector<NodeId> members;
        std::uint32_t consumed = 0;
    };

    std::vector<Pool> pools;
    std::vector<std::uint8_t> in_round;
    std::uint32_t total_consumed = 0;
    std::uint32_t total_size = 0;

    explicit GroupedCirculation(const NeighborPartition& partition);
    NodeId draw(Rng& rng, GroupWeighting weighting);
};

// State introspection for diagnostics and trace-replay tests.
struct CirculationSnapshot {
    std::vector<NodeId> consumed;  // b(u,v), sorted
    std::vector<NodeId> remaining; // pool minus b(u,v), sorted
};

// One walk's state: previous/current node, its seeded random stream and the
// per-directed-edge histories. Pure function of (graph, seed, start, config):
// identical inputs give identical walks.
class Walker {
public:
    Walker(const WalkerConfig& config, NodeId start, std::uint64_t seed);

    // Advance one step through the session. Throws BudgetExhaustedError
    // before committing anything when the needed query is over budget.
    NodeId step(AccessSession& session);

    NodeId current() const { return curr_; }
    std::optional<NodeId> previous() const { return prev_; }

    // History of the directed pair u->v for circulated kinds; nullopt when
    // the pair was never the walk context.
    std::optional<CirculationSnapshot> circulation(NodeId u, NodeId v) const;

private:
    static std::uint64_t key(NodeId u, NodeId v) {
        return (static_cast<std::uint64_t>(u) << 32) | v;
    }

    NodeId step_uniform(std::span<const NodeId> nbrs);
    NodeId step_mhrw(AccessSession& session, std::span<const NodeId> nbrs);
    NodeId step_nbsrw(std::span<const NodeId> nbrs);
    NodeId step_cnrw(std::span<const NodeId> nbrs);
    NodeId step_nbcnrw(std::span<const NodeId> nbrs);
    NodeId step_gnrw(AccessSession& session, std::span<const NodeId> nbrs);

    WalkerConfig config_;
    std::optional<NodeId> prev_;
    NodeId curr_;
    Rng rng_;
    std::unordered_map<std::uint64_t, Circulation> circulations_;
    std::unordered_map<std::uint64_t, GroupedCirculation> grouped_;
    std::unordered_map<NodeId, NeighborPartition> partitions_;
};

// Walk termination: a fixed step count, or the session budget (the walk stops
// when the next fresh query would exceed it, or after budget * step_cap_factor
// steps — revisits are free, so a budget larger than the reachable node count
// could otherwise never terminate the walk).
struct WalkLimit {
    static WalkLimit steps(std::uint64_t n) { return {n, 0, false}; }
    static WalkLimit budget(std::uint64_t step_cap_factor = 50) {
        return {0, step_cap_factor, true};
    }

    std::uint64_t step_count = 0;
    std::uint64_t step_cap_factor = 0;
    bool budget_mode = false;
};

Trace walk(const WalkerConfig& config, NodeId start, const WalkLimit& limit,
           AccessSession& session, std::uint64_t seed);

// Trace CSV: step, node_id (original), unique_queries.
void write_trace_csv(std::ostream& out, const Trace& trace, const Graph& graph);

} // namespace netsamp
