#include "netsamp/pathblocks.hpp"

#include "netsamp/csv.hpp"

#include <algorithm>

namespace netsamp {

std::vector<PathBlock> decompose(const Trace& trace, NodeId u, NodeId v,
                                 const Graph& graph) {
    if (!graph.has_edge(u, v))
        throw Error("path blocks need a graph edge as root");

    const auto& nodes = trace.nodes;
    std::vector<std::size_t> occurrences;
    for (std::size_t t = 0; t + 1 < nodes.size(); ++t)
        if (nodes[t] == u && nodes[t + 1] == v) occurrences.push_back(t);

    std::vector<PathBlock> blocks;
    for (std::size_t k = 0; k < occurrences.size(); ++k) {
        const std::size_t p = occurrences[k];
        if (p + 2 >= nodes.size()) break; // no successor chosen yet
        PathBlock block;
        block.begin = p;
        block.entry = nodes[p + 2];
        if (k + 1 < occurrences.size()) {
            block.length = occurrences[k + 1] - p;
            block.complete = true;
        } else {
            block.length = nodes.size() - p;
            block.complete = false;
        }
        blocks.push_back(block);
    }
    return blocks;
}

std::unordered_map<NodeId, std::uint64_t> block_counts(std::span<const PathBlock> blocks,
                                                       std::size_t M) {
    std::unordered_map<NodeId, std::uint64_t> counts;
    std::size_t seen = 0;
    for (const PathBlock& block : blocks) {
        if (!block.complete) continue;
        if (seen == M) break;
        ++counts[*block.entry];
        ++seen;
    }
    if (seen < M) throw Error("fewer complete blocks than requested");
    return counts;
}

void write_blocks_csv(std::ostream& out, std::span<const PathBlock> blocks,
                      const Trace& trace, const Graph& graph) {
    csv::write_record(out, {"block", "entry_neighbor", "length"});
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        const PathBlock& b = blocks[i];
        csv::write_record(out, {std::to_string(i),
                                b.entry ? graph.original_id(*b.entry) : std::string{},
                                std::to_string(b.length)});
    }
    (void)trace;
}

EscapeEstimate escape_probability(WalkerKind kind, std::uint32_t half_size,
                                  std::uint32_t reps, std::uint64_t steps,
                                  std::uint64_t seed) {
    if (kind != WalkerKind::Srw && kind != WalkerKind::Cnrw)
        throw ConfigError("escape probability is defined for srw and cnrw");
    if (half_size < 2) throw ConfigError("barbell sides must each have at least 2 nodes");
    if (reps == 0 || steps == 0) throw ConfigError("need at least one rep and one step");

    const Graph graph = gen_barbell(half_size, half_size);
    const auto [u, w] = barbell_bridge(half_size);
    const std::uint32_t n = graph.degree(u);

    std::vector<std::uint64_t> depth_visits(n, 0);
    std::vector<std::uint64_t> depth_crossings(n, 0);
    std::uint64_t visits = 0, crossings = 0;

    WalkerConfig config{kind, std::nullopt, GroupWeighting::RemainingCount};
    for (std::uint32_t r = 0; r < reps; ++r) {
        AccessSession session(graph);
        Walker walker(config, u, combine_seed({seed, r}));
        for (std::uint64_t t = 0; t < steps; ++t) {
            const NodeId curr = walker.current();
            std::uint32_t depth = 0;
            bool bridge_available = true;
            if (curr == u) {
                ++visits;
                if (kind == WalkerKind::Cnrw && walker.previous()) {
                    if (auto snap = walker.circulation(*walker.previous(), u)) {
                        depth = static_cast<std::uint32_t>(snap->consumed.size());
                        bridge_available = !std::binary_search(snap->consumed.begin(),
                                                               snap->consumed.end(), w);
                    }
                }
                if (bridge_available) ++depth_visits[depth];
            }
            const NodeId next = walker.step(session);
            if (curr == u && next == w) {
                ++crossings;
                if (bridge_available) ++depth_crossings[depth];
            }
        }
    }

    if (visits == 0) throw Error("walks never visited the bridge endpoint");

    EscapeEstimate est;
    est.visits = visits;
    est.pooled_rate = static_cast<double>(crossings) / static_cast<double>(visits);
    double sum = 0.0;
    for (std::uint32_t d = 0; d < n; ++d) {
        if (depth_visits[d] == 0) continue;
        sum += static_cast<double>(depth_crossings[d]) /
               static_cast<double>(depth_visits[d]);
        ++est.depths_observed;
        est.qualifying_visits += depth_visits[d];
    }
    if (est.depths_observed == 0) throw Error("no qualifying visits to the bridge endpoint");
    est.hazard_mean = sum / static_cast<double>(est.depths_observed);
    return est;
}

} // namespace netsamp
