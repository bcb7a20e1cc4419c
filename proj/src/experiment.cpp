#include "netsamp/experiment.hpp"

#include "netsamp/csv.hpp"
#include "netsamp/parallel.hpp"

#include <algorithm>
#include <cstdio>
#include <queue>

namespace netsamp {

namespace {

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

} // namespace

void ExperimentConfig::validate(const Graph& graph) const {
    if (algorithms.empty()) throw ConfigError("no algorithms configured");
    for (const auto& a : algorithms) a.walker_config(weighting).validate();
    const bool budget_mode = !budgets.empty();
    if (budget_mode == steps.has_value())
        throw ConfigError("configure exactly one of budgets or steps");
    if (budget_mode) {
        std::uint64_t prev = 0;
        for (std::uint64_t b : budgets) {
            if (b == 0) throw ConfigError("budgets must be positive");
            if (b <= prev && prev != 0) throw ConfigError("budgets must be ascending");
            prev = b;
        }
        if (budget_step_cap_factor == 0)
            throw ConfigError("budget step cap factor must be positive");
    } else if (*steps == 0) {
        throw ConfigError("steps must be positive");
    }
    if (reps < 1) throw ConfigError("reps must be >= 1");
    for (const auto& m : metrics)
        if (m != "kl" && m != "l2" && m != "relerr")
            throw ConfigError("unknown metric: " + m);
    if (start_policy == StartPolicy::Fixed && !graph.contains(fixed_start))
        throw ConfigError("fixed start node is not in the graph");
}

std::uint64_t derive_rep_seed(std::uint64_t seed, const AlgorithmSpec& algorithm,
                              std::uint64_t budget, std::uint32_t rep) {
    const std::string label = algorithm.algorithm_label() + "/" + algorithm.grouping_label();
    return combine_seed({seed, fnv1a64(label.data(), label.size()), budget, rep});
}

NodeId draw_start_node(const Graph& graph, StartPolicy policy, NodeId fixed, Rng& rng) {
    switch (policy) {
    case StartPolicy::Fixed:
        return fixed;
    case StartPolicy::UniformRandom:
        return static_cast<NodeId>(rng.bounded(graph.node_count()));
    case StartPolicy::DegreeWeighted: {
        std::uint64_t r = rng.bounded(2 * graph.edge_count());
        for (NodeId v = 0;; ++v) {
            const std::uint64_t k = graph.degree(v);
            if (r < k) return v;
            r -= k;
        }
    }
    }
    return fixed;
}

std::vector<ResultRow> run_experiment(const Graph& graph, const ExperimentConfig& config,
                                      const MeasureFunction& measure) {
    config.validate(graph);

    const bool budget_mode = !config.budgets.empty();
    std::vector<std::uint64_t> budgets = config.budgets;
    if (!budget_mode) budgets = {0}; // single pseudo-cell in step mode

    double truth = 0.0;
    for (NodeId v = 0; v < graph.node_count(); ++v) truth += measure(v);
    truth /= static_cast<double>(graph.node_count());

    const std::vector<double> pi = true_stationary(graph);
    const bool want_kl = config.metrics.count("kl") > 0;
    const bool want_l2 = config.metrics.count("l2") > 0;

    struct Task {
        std::size_t algorithm;
        std::size_t budget;
        std::uint32_t rep;
    };
    std::vector<Task> tasks;
    tasks.reserve(config.algorithms.size() * budgets.size() * config.reps);
    for (std::size_t a = 0; a < config.algorithms.size(); ++a)
        for (std::size_t b = 0; b < budgets.size(); ++b)
            for (std::uint32_t r = 0; r < config.reps; ++r)
                tasks.push_back({a, b, r});

    std::vector<ResultRow> rows(tasks.size());
    parallel_for(tasks.size(), config.threads, [&](std::size_t i) {
        const Task& task = tasks[i];
        const AlgorithmSpec& algorithm = config.algorithms[task.algorithm];
        const std::uint64_t budget = budgets[task.budget];
        const std::uint64_t rep_seed =
            derive_rep_seed(config.seed, algorithm, budget, task.rep);

        Rng rng(rep_seed);
        const NodeId start =
            draw_start_node(graph, config.start_policy, config.fixed_start, rng);
        const std::uint64_t walk_seed = rng.next();

        AccessSession session(graph, budget_mode ? std::optional(budget) : std::nullopt);
        const WalkLimit limit = budget_mode
                                    ? WalkLimit::budget(config.budget_step_cap_factor)
                                    : WalkLimit::steps(*config.steps);
        const Trace trace =
            walk(algorithm.walker_config(config.weighting), start, limit, session, walk_seed);

        ResultRow& row = rows[i];
        row.algorithm = algorithm.algorithm_label();
        row.grouping = algorithm.grouping_label();
        row.rep = task.rep;
        if (budget_mode) row.budget = budget;
        row.steps_taken = trace.steps();
        row.unique_queries = session.unique_query_count();
        row.seed = rep_seed;
        row.estimate = uniform_mean(trace, measure, graph, config.burnin).estimate;
        row.relative_error = relative_error(row.estimate, truth);
        if (want_kl || want_l2) {
            const Trace* one = &trace;
            auto dist = empirical_distribution({one, 1}, graph.node_count(), config.burnin);
            if (want_kl) row.kl = kl_symmetric(pi, dist);
            if (want_l2) row.l2 = l2_distance(pi, dist);
        }
    });
    return rows;
}

void write_rows_csv(std::ostream& out, std::span<const ResultRow> rows) {
    csv::write_record(out, {"algorithm", "grouping", "rep", "budget", "steps_taken",
                            "unique_queries", "estimate", "relative_error", "kl", "l2",
                            "seed"});
    for (const ResultRow& row : rows) {
        csv::write_record(
            out, {row.algorithm, row.grouping, std::to_string(row.rep),
                  row.budget ? std::to_string(*row.budget) : std::string{},
                  std::to_string(row.steps_taken), std::to_string(row.unique_queries),
                  format_double(row.estimate), format_double(row.relative_error),
                  row.kl ? format_double(*row.kl) : std::string{},
                  row.l2 ? format_double(*row.l2) : std::string{},
                  std::to_string(row.seed)});
    }
}

bool is_connected(const Graph& graph) {
    if (graph.node_count() == 0) return false;
    std::vector<std::uint8_t> seen(graph.node_count(), 0);
    std::queue<NodeId> q;
    q.push(0);
    seen[0] = 1;
    std::size_t reached = 1;
    while (!q.empty()) {
        const NodeId u = q.front();
        q.pop();
        for (NodeId v : graph.neighbors(u)) {
            if (!seen[v]) {
                seen[v] = 1;
                ++reached;
                q.push(v);
            }
        }
    }
    return reached == graph.node_count();
}

std::vector<StationarityRow> run_stationarity_check(const Graph& graph,
                                                    std::span<const AlgorithmSpec> algorithms,
                                                    std::uint32_t walks, std::uint64_t steps,
                                                    std::uint64_t seed, unsigned threads,
                                                    std::uint64_t burnin,
                                                    GroupWeighting weighting) {
    if (!is_connected(graph))
        throw Error("stationarity check needs a connected graph");
    if (walks == 0 || steps == 0)
        throw ConfigError("stationarity check needs walks >= 1 and steps >= 1");

    const std::vector<double> pi = true_stationary(graph);
    const std::vector<double> uniform(graph.node_count(),
                                      1.0 / static_cast<double>(graph.node_count()));

    std::vector<StationarityRow> rows;
    rows.reserve(algorithms.size());
    for (const AlgorithmSpec& algorithm : algorithms) {
        std::vector<Trace> traces(walks);
        parallel_for(walks, threads, [&](std::size_t i) {
            const std::uint64_t rep_seed =
                derive_rep_seed(seed, algorithm, steps, static_cast<std::uint32_t>(i));
            Rng rng(rep_seed);
            const NodeId start =
                draw_start_node(graph, StartPolicy::UniformRandom, 0, rng);
            AccessSession session(graph);
            traces[i] = walk(algorithm.walker_config(weighting), start,
                             WalkLimit::steps(steps), session, rng.next());
        });
        const auto dist = empirical_distribution(traces, graph.node_count(), burnin);
        const bool uniform_target = algorithm.kind == WalkerKind::Mhrw;
        const auto& target = uniform_target ? uniform : pi;

        StationarityRow row;
        row.algorithm = algorithm.algorithm_label();
        row.grouping = algorithm.grouping_label();
        row.target = uniform_target ? "uniform" : "degree";
        row.kl = kl_symmetric(target, dist);
        row.l2 = l2_distance(target, dist);
        row.tv = tv_distance(target, dist);
        row.samples = static_cast<std::uint64_t>(walks) * (steps + 1 - burnin);
        rows.push_back(std::move(row));
    }
    return rows;
}

void write_stationarity_csv(std::ostream& out, std::span<const StationarityRow> rows) {
    csv::write_record(out, {"algorithm", "grouping", "target", "kl", "l2", "tv", "samples"});
    for (const StationarityRow& row : rows)
        csv::write_record(out, {row.algorithm, row.grouping, row.target,
                                format_double(row.kl), format_double(row.l2),
                                format_double(row.tv), std::to_string(row.samples)});
}

} // namespace netsamp
