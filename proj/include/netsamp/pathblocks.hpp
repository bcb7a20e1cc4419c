#pragma once

#include "netsamp/graph.hpp"
#include "netsamp/types.hpp"
#include "netsamp/walkers.hpp"

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <unordered_map>
#include <vector>

namespace netsamp {

// Trace segment rooted on the ordered edge (u,v): starts at an occurrence of
// u followed by v, runs up to (not including) the next such occurrence. The
// entry neighbor is the successor chosen right after u->v; a block is
// complete when the next occurrence terminates it inside the trace.
struct PathBlock {
    std::size_t begin = 0;  // index of u in the trace
    std::size_t length = 0; // nodes in the block
    std::optional<NodeId> entry;
    bool complete = false;
};

// Scan the trace from the first occurrence of the directed pair u->v and emit
// consecutive, non-overlapping blocks. A trailing occurrence with no chosen
// successor yet produces no block; a trailing block whose terminator never
// arrives is emitted with complete == false. Empty when u->v never occurs.
// Throws when (u,v) is not a graph edge.
std::vector<PathBlock> decompose(const Trace& trace, NodeId u, NodeId v,
                                 const Graph& graph);

// Entry-neighbor occurrence counts among the first M complete blocks.
// Throws when M exceeds the number of complete blocks.
std::unordered_map<NodeId, std::uint64_t> block_counts(std::span<const PathBlock> blocks,
                                                       std::size_t M);

// Diagnostic CSV: block index, entry neighbor (original id), length.
void write_blocks_csv(std::ostream& out, std::span<const PathBlock> blocks,
                      const Trace& trace, const Graph& graph);

// Monte Carlo bridge-crossing estimate on barbell(n, n), walks started at the
// G1 bridge endpoint. Visits to the endpoint are bucketed by the active
// circulation's consumed count and restricted to visits where the bridge is
// still unconsumed there (for SRW every visit qualifies at depth 0);
// hazard_mean averages the per-depth crossing rates with equal weight, which
// is the theorem-style escape probability. pooled_rate is raw crossings over
// all visits, which converges to 1/n for both walks. Walks must be long
// enough for circulations to sweep all depths (per-walk visits >> n^2).
struct EscapeEstimate {
    double hazard_mean = 0.0;
    double pooled_rate = 0.0;
    std::uint64_t visits = 0;            // all visits with a next step
    std::uint64_t qualifying_visits = 0; // bridge still available
    std::uint32_t depths_observed = 0;
};

EscapeEstimate escape_probability(WalkerKind kind, std::uint32_t half_size,
                                  std::uint32_t reps, std::uint64_t steps,
                                  std::uint64_t seed);

} // namespace netsamp
