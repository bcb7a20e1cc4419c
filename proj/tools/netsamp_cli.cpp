// Command line front end: budget sweeps, stationarity checks, trace and
// path-block exports, and the barbell escape diagnostic.

#include "netsamp/experiment.hpp"
#include "netsamp/pathblocks.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace netsamp;

struct GraphOptions {
    std::string file;
    std::string gen;
    std::string edge_policy = "either";
    std::string attrs_file;
};

void add_graph_options(CLI::App* cmd, GraphOptions& opts) {
    auto* file = cmd->add_option("--graph", opts.file, "Edge list file (u v per line, # comments)");
    auto* gen = cmd->add_option("--gen", opts.gen,
                                "Synthetic graph: barbell:n1,n2 or clustered:s1,s2,...");
    file->excludes(gen);
    cmd->add_option("--edge-policy", opts.edge_policy,
                    "Directed-to-undirected policy for --graph: either|mutual")
        ->check(CLI::IsMember({"either", "mutual"}));
    cmd->add_option("--attrs", opts.attrs_file,
                    "Attribute CSV (header row, first column node id)");
}

std::vector<std::size_t> parse_size_list(std::string_view text) {
    std::vector<std::size_t> sizes;
    std::stringstream ss{std::string(text)};
    std::string tok;
    while (std::getline(ss, tok, ','))
        sizes.push_back(static_cast<std::size_t>(std::stoull(tok)));
    return sizes;
}

Graph load_graph(const GraphOptions& opts) {
    Graph g = [&] {
        if (!opts.file.empty()) {
            const EdgePolicy policy =
                opts.edge_policy == "mutual" ? EdgePolicy::Mutual : EdgePolicy::Either;
            return load_edge_list_file(opts.file, policy);
        }
        if (opts.gen.empty())
            throw ConfigError("specify a graph with --graph FILE or --gen SPEC");
        auto colon = opts.gen.find(':');
        const std::string kind = opts.gen.substr(0, colon);
        const std::string args =
            colon == std::string::npos ? std::string{} : opts.gen.substr(colon + 1);
        if (kind == "barbell") {
            auto sizes = parse_size_list(args);
            if (sizes.size() != 2)
                throw ConfigError("barbell generator needs two sizes, e.g. barbell:25,25");
            return gen_barbell(sizes[0], sizes[1]);
        }
        if (kind == "clustered") {
            auto sizes = parse_size_list(args);
            if (sizes.empty())
                throw ConfigError("clustered generator needs sizes, e.g. clustered:10,30,50");
            return gen_clustered(sizes);
        }
        throw ConfigError("unknown generator: " + kind);
    }();
    if (!opts.attrs_file.empty()) {
        std::ifstream in(opts.attrs_file);
        if (!in) throw ConfigError("cannot open attribute file: " + opts.attrs_file);
        g.attach_attributes(AttributeTable::load_csv(in, g));
    }
    return g;
}

std::vector<std::uint64_t> parse_budgets(const std::string& text) {
    std::vector<std::uint64_t> budgets;
    if (text.find(':') != std::string::npos) {
        std::uint64_t start = 0, stop = 0, step = 0;
        char c1 = 0, c2 = 0;
        std::istringstream ss(text);
        if (!(ss >> start >> c1 >> stop >> c2 >> step) || c1 != ':' || c2 != ':' || step == 0)
            throw ConfigError("bad budget range, expected start:stop:step");
        for (std::uint64_t b = start; b <= stop; b += step) budgets.push_back(b);
    } else {
        std::stringstream ss(text);
        std::string tok;
        while (std::getline(ss, tok, ','))
            budgets.push_back(std::stoull(tok));
    }
    return budgets;
}

std::vector<AlgorithmSpec> build_algorithms(const std::vector<std::string>& algo_names,
                                            const std::vector<std::string>& groupings) {
    std::vector<AlgorithmSpec> specs;
    for (const auto& name : algo_names) {
        const WalkerKind kind = parse_walker_kind(name);
        if (kind == WalkerKind::Gnrw) {
            if (groupings.empty())
                throw ConfigError("gnrw needs --groupby (hash:m, degree:m or attr:NAME[:m])");
            for (const auto& g : groupings)
                specs.push_back({kind, GroupingStrategy::parse(g)});
        } else {
            specs.push_back({kind, std::nullopt});
        }
    }
    return specs;
}

MeasureFunction build_measure(const std::string& spec, const Graph& graph) {
    if (spec == "degree") return MeasureFunction::degree(graph);
    if (spec.rfind("attr:", 0) == 0)
        return MeasureFunction::attribute(graph, spec.substr(5));
    if (spec.rfind("indicator:", 0) == 0) {
        const std::string path = spec.substr(10);
        std::ifstream in(path);
        if (!in) throw ConfigError("cannot open indicator node file: " + path);
        std::vector<std::uint8_t> member(graph.node_count(), 0);
        std::string line;
        while (std::getline(in, line)) {
            const auto start = line.find_first_not_of(" \t\r");
            if (start == std::string::npos || line[start] == '#') continue;
            const auto end = line.find_last_not_of(" \t\r");
            const std::string id = line.substr(start, end - start + 1);
            auto v = graph.find_original(id);
            if (!v) throw ConfigError("indicator node not in graph: " + id);
            member[*v] = 1;
        }
        return MeasureFunction::indicator("indicator:" + path, std::move(member));
    }
    throw ConfigError("unknown measure: " + spec);
}

std::ostream& open_output(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw ConfigError("cannot open output file: " + path);
    return file;
}

StartPolicy parse_start_policy(const std::string& text, const Graph& graph, NodeId& fixed) {
    if (text == "uniform") return StartPolicy::UniformRandom;
    if (text == "degree") return StartPolicy::DegreeWeighted;
    if (text.rfind("fixed:", 0) == 0) {
        auto v = graph.find_original(text.substr(6));
        if (!v) throw ConfigError("fixed start node not in graph: " + text.substr(6));
        fixed = *v;
        return StartPolicy::Fixed;
    }
    throw ConfigError("unknown start policy: " + text);
}

int run(int argc, char** argv) {
    CLI::App app{"Random-walk sampling over a restricted-access graph interface"};
    app.require_subcommand(1);

    // ---- sweep ----
    auto* sweep = app.add_subcommand("sweep", "Budget/step sweep emitting one CSV row per walk");
    GraphOptions sweep_graph;
    add_graph_options(sweep, sweep_graph);
    std::vector<std::string> algo_names, groupings;
    std::string budgets_text, measure_spec = "degree", metrics_text = "relerr";
    std::string out_path, start_policy_text = "uniform";
    std::uint64_t steps = 0, seed = 0, burnin = 0;
    std::uint32_t reps = 1;
    unsigned threads = 0;
    std::uint64_t cap_factor = 50;
    bool full_size_weights = false;
    sweep->add_option("--algo", algo_names, "Algorithm (repeatable): srw|mhrw|nbsrw|cnrw|gnrw|nbcnrw")
        ->required();
    sweep->add_option("--groupby", groupings, "GNRW grouping (repeatable): hash:m|degree:m|attr:NAME[:m]");
    sweep->add_option("--budgets", budgets_text, "Query budgets: start:stop:step or comma list");
    sweep->add_option("--steps", steps, "Fixed step count (alternative to --budgets)");
    sweep->add_option("--reps", reps, "Replicates per cell");
    sweep->add_option("--seed", seed, "Master seed");
    sweep->add_option("--measure", measure_spec, "degree | attr:NAME | indicator:FILE");
    sweep->add_option("--burnin", burnin, "Samples discarded before estimating");
    sweep->add_option("--metrics", metrics_text, "Comma list from kl,l2,relerr");
    sweep->add_option("--out", out_path, "Output CSV (stdout when omitted)");
    sweep->add_option("--start-policy", start_policy_text, "uniform | degree | fixed:NODE");
    sweep->add_option("--threads", threads, "Worker threads (0 = hardware)");
    sweep->add_option("--budget-step-cap", cap_factor,
                      "Budget mode also stops after budget*factor steps");
    sweep->add_flag("--full-size-group-weights", full_size_weights,
                    "GNRW: weigh candidate groups by full size instead of remaining members");

    // ---- stationarity ----
    auto* stat = app.add_subcommand("stationarity",
                                    "Repeated-walk sampling-distribution check per algorithm");
    GraphOptions stat_graph;
    add_graph_options(stat, stat_graph);
    std::vector<std::string> stat_algos, stat_groupings;
    std::uint32_t stat_walks = 100;
    std::uint64_t stat_steps = 10000, stat_seed = 0, stat_burnin = 0;
    std::string stat_out;
    unsigned stat_threads = 0;
    stat->add_option("--algo", stat_algos, "Algorithm (repeatable)")->required();
    stat->add_option("--groupby", stat_groupings, "GNRW grouping (repeatable)");
    stat->add_option("--walks", stat_walks, "Independent walks per algorithm");
    stat->add_option("--steps", stat_steps, "Steps per walk");
    stat->add_option("--seed", stat_seed, "Master seed");
    stat->add_option("--burnin", stat_burnin, "Samples discarded per walk");
    stat->add_option("--out", stat_out, "Output CSV (stdout when omitted)");
    stat->add_option("--threads", stat_threads, "Worker threads (0 = hardware)");

    // ---- trace ----
    auto* tr = app.add_subcommand("trace", "Export one walk as CSV (step, node_id, unique_queries)");
    GraphOptions tr_graph;
    add_graph_options(tr, tr_graph);
    std::string tr_algo = "srw", tr_grouping, tr_start, tr_out;
    std::uint64_t tr_steps = 0, tr_budget = 0, tr_seed = 0;
    tr->add_option("--algo", tr_algo, "Algorithm");
    tr->add_option("--groupby", tr_grouping, "GNRW grouping");
    tr->add_option("--steps", tr_steps, "Step count");
    tr->add_option("--budget", tr_budget, "Query budget (alternative to --steps)");
    tr->add_option("--start", tr_start, "Start node (original id; random when omitted)");
    tr->add_option("--seed", tr_seed, "Seed");
    tr->add_option("--out", tr_out, "Output CSV (stdout when omitted)");

    // ---- blocks ----
    auto* bl = app.add_subcommand("blocks",
                                  "Decompose a walk into path blocks rooted on an edge");
    GraphOptions bl_graph;
    add_graph_options(bl, bl_graph);
    std::string bl_algo = "cnrw", bl_grouping, bl_u, bl_v, bl_out, bl_start;
    std::uint64_t bl_steps = 10000, bl_seed = 0;
    bl->add_option("--algo", bl_algo, "Algorithm");
    bl->add_option("--groupby", bl_grouping, "GNRW grouping");
    bl->add_option("--root-u", bl_u, "Root edge tail (original id)")->required();
    bl->add_option("--root-v", bl_v, "Root edge head (original id)")->required();
    bl->add_option("--steps", bl_steps, "Step count");
    bl->add_option("--start", bl_start, "Start node (original id; random when omitted)");
    bl->add_option("--seed", bl_seed, "Seed");
    bl->add_option("--out", bl_out, "Output CSV (stdout when omitted)");

    // ---- escape ----
    auto* esc = app.add_subcommand("escape", "Barbell bridge-crossing estimate");
    std::string esc_kind = "cnrw";
    std::uint32_t esc_n = 10, esc_reps = 4;
    std::uint64_t esc_steps = 500000, esc_seed = 0;
    esc->add_option("--kind", esc_kind, "srw | cnrw")->check(CLI::IsMember({"srw", "cnrw"}));
    esc->add_option("--n", esc_n, "Barbell half size");
    esc->add_option("--reps", esc_reps, "Independent walks");
    esc->add_option("--steps", esc_steps, "Steps per walk");
    esc->add_option("--seed", esc_seed, "Seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2; // flag/usage problems are config errors
    }

    if (sweep->parsed()) {
        const Graph graph = load_graph(sweep_graph);
        ExperimentConfig config;
        config.algorithms = build_algorithms(algo_names, groupings);
        if (!budgets_text.empty()) config.budgets = parse_budgets(budgets_text);
        if (steps > 0) config.steps = steps;
        config.reps = reps;
        config.seed = seed;
        config.burnin = burnin;
        config.metrics.clear();
        std::stringstream ms(metrics_text);
        std::string tok;
        while (std::getline(ms, tok, ',')) config.metrics.insert(tok);
        config.start_policy = parse_start_policy(start_policy_text, graph, config.fixed_start);
        config.threads = threads;
        config.budget_step_cap_factor = cap_factor;
        config.weighting = full_size_weights ? GroupWeighting::FullSize
                                             : GroupWeighting::RemainingCount;
        const MeasureFunction measure = build_measure(measure_spec, graph);
        const auto rows = run_experiment(graph, config, measure);
        std::ofstream file;
        write_rows_csv(open_output(file, out_path), rows);
    } else if (stat->parsed()) {
        const Graph graph = load_graph(stat_graph);
        const auto algorithms = build_algorithms(stat_algos, stat_groupings);
        const auto rows = run_stationarity_check(graph, algorithms, stat_walks, stat_steps,
                                                 stat_seed, stat_threads, stat_burnin);
        std::ofstream file;
        write_stationarity_csv(open_output(file, stat_out), rows);
    } else if (tr->parsed()) {
        const Graph graph = load_graph(tr_graph);
        if ((tr_steps == 0) == (tr_budget == 0))
            throw ConfigError("trace needs exactly one of --steps or --budget");
        AlgorithmSpec spec{parse_walker_kind(tr_algo),
                           tr_grouping.empty()
                               ? std::nullopt
                               : std::optional(GroupingStrategy::parse(tr_grouping))};
        Rng rng(tr_seed);
        NodeId start;
        if (tr_start.empty()) {
            start = static_cast<NodeId>(rng.bounded(graph.node_count()));
        } else {
            auto v = graph.find_original(tr_start);
            if (!v) throw ConfigError("start node not in graph: " + tr_start);
            start = *v;
        }
        AccessSession session(graph, tr_budget > 0 ? std::optional(tr_budget) : std::nullopt);
        const WalkLimit limit =
            tr_budget > 0 ? WalkLimit::budget() : WalkLimit::steps(tr_steps);
        const Trace trace = walk(spec.walker_config(GroupWeighting::RemainingCount), start,
                                 limit, session, rng.next());
        std::ofstream file;
        write_trace_csv(open_output(file, tr_out), trace, graph);
    } else if (bl->parsed()) {
        const Graph graph = load_graph(bl_graph);
        AlgorithmSpec spec{parse_walker_kind(bl_algo),
                           bl_grouping.empty()
                               ? std::nullopt
                               : std::optional(GroupingStrategy::parse(bl_grouping))};
        auto u = graph.find_original(bl_u);
        auto v = graph.find_original(bl_v);
        if (!u || !v) throw ConfigError("root edge endpoints must be graph nodes");
        Rng rng(bl_seed);
        NodeId start = *u;
        if (!bl_start.empty()) {
            auto s = graph.find_original(bl_start);
            if (!s) throw ConfigError("start node not in graph: " + bl_start);
            start = *s;
        }
        AccessSession session(graph);
        const Trace trace = walk(spec.walker_config(GroupWeighting::RemainingCount), start,
                                 WalkLimit::steps(bl_steps), session, rng.next());
        const auto blocks = decompose(trace, *u, *v, graph);
        std::ofstream file;
        write_blocks_csv(open_output(file, bl_out), blocks, trace, graph);
    } else if (esc->parsed()) {
        const auto est = escape_probability(parse_walker_kind(esc_kind), esc_n, esc_reps,
                                            esc_steps, esc_seed);
        std::cout << "kind=" << esc_kind << " n=" << esc_n
                  << " escape=" << est.hazard_mean << " pooled=" << est.pooled_rate
                  << " visits=" << est.visits << " qualifying=" << est.qualifying_visits
                  << " depths=" << est.depths_observed << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const netsamp::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
