#pragma once

#include "netsamp/estimation.hpp"
#include "netsamp/graph.hpp"
#include "netsamp/metrics.hpp"
#include "netsamp/walkers.hpp"

#include <cstdint>
#include <optional>
#include <ostream>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace netsamp {

struct AlgorithmSpec {
    WalkerKind kind = WalkerKind::Srw;
    std::optional<GroupingStrategy> grouping;

    WalkerConfig walker_config(GroupWeighting weighting) const {
        return {kind, grouping, weighting};
    }
    std::string algorithm_label() const { return std::string(walker_kind_name(kind)); }
    std::string grouping_label() const {
        return kind == WalkerKind::Gnrw && grouping ? grouping->label() : std::string{};
    }
};

enum class StartPolicy { UniformRandom, Fixed, DegreeWeighted };

struct ExperimentConfig {
    std::vector<AlgorithmSpec> algorithms;
    std::vector<std::uint64_t> budgets; // budget mode when nonempty
    std::optional<std::uint64_t> steps; // step mode otherwise
    std::uint32_t reps = 1;
    std::uint64_t seed = 0;
    std::uint64_t burnin = 0;
    std::set<std::string> metrics = {"relerr"}; // subset of {kl, l2, relerr}
    StartPolicy start_policy = StartPolicy::UniformRandom;
    NodeId fixed_start = 0;
    GroupWeighting weighting = GroupWeighting::RemainingCount;
    std::uint64_t budget_step_cap_factor = 50;
    unsigned threads = 0;

    void validate(const Graph& graph) const; // throws ConfigError
};

struct ResultRow {
    std::string algorithm;
    std::string grouping;
    std::uint32_t rep = 0;
    std::optional<std::uint64_t> budget;
    std::uint64_t steps_taken = 0;
    std::uint64_t unique_queries = 0;
    double estimate = 0.0;
    double relative_error = 0.0;
    std::optional<double> kl;
    std::optional<double> l2;
    std::uint64_t seed = 0;
};

// One fresh session + seeded walk per (algorithm x budget x rep); estimates
// use the uniform-over-nodes ratio estimator against ground truth computed
// from the full graph. Rows come back in deterministic (algorithm, budget,
// rep) order regardless of thread count.
std::vector<ResultRow> run_experiment(const Graph& graph, const ExperimentConfig& config,
                                      const MeasureFunction& measure);

// Header exactly matches the ResultRow field names; optional metric cells are
// left empty when not requested.
void write_rows_csv(std::ostream& out, std::span<const ResultRow> rows);

struct StationarityRow {
    std::string algorithm;
    std::string grouping;
    std::string target; // "degree" or "uniform"
    double kl = 0.0;
    double l2 = 0.0;
    double tv = 0.0;
    std::uint64_t samples = 0;
};

// Repeated-walk sampling-distribution check: `walks` independent walks of
// `steps` steps per algorithm, empirical distribution compared against the
// algorithm's own target (degree-proportional, uniform for MHRW). Requires a
// connected graph.
std::vector<StationarityRow> run_stationarity_check(const Graph& graph,
                                                    std::span<const AlgorithmSpec> algorithms,
                                                    std::uint32_t walks, std::uint64_t steps,
                                                    std::uint64_t seed, unsigned threads = 0,
                                                    std::uint64_t burnin = 0,
                                                    GroupWeighting weighting =
                                                        GroupWeighting::RemainingCount);

void write_stationarity_csv(std::ostream& out, std::span<const StationarityRow> rows);

bool is_connected(const Graph& graph);

// Per-rep seed: all walk randomness (start node draw + walker stream) derives
// from hash(seed, algorithm, grouping, budget, rep).
std::uint64_t derive_rep_seed(std::uint64_t seed, const AlgorithmSpec& algorithm,
                              std::uint64_t budget, std::uint32_t rep);

NodeId draw_start_node(const Graph& graph, StartPolicy policy, NodeId fixed, Rng& rng);

} // namespace netsamp
