#include "netsamp/estimation.hpp"

namespace netsamp {

MeasureFunction MeasureFunction::degree(const Graph& graph) {
    return {"degree", [&graph](NodeId v) { return static_cast<double>(graph.degree(v)); }};
}

MeasureFunction MeasureFunction::attribute(const Graph& graph, const std::string& column) {
    if (!graph.attributes().has_column(column))
        throw Error("unknown measure attribute: " + column);
    if (graph.attributes().kind(column) != AttributeKind::Numeric)
        throw Error("measure attribute must be numeric: " + column);
    return {"attr:" + column, [&graph, column](NodeId v) {
                auto val = graph.attributes().numeric(column, v);
                if (!val)
                    throw Error("node " + graph.original_id(v) +
                                " is missing measure attribute " + column);
                return *val;
            }};
}

MeasureFunction MeasureFunction::indicator(std::string name,
                                           std::vector<std::uint8_t> member) {
    return {std::move(name), [member = std::move(member)](NodeId v) {
                return v < member.size() && member[v] ? 1.0 : 0.0;
            }};
}

EstimateReport stationary_mean(const Trace& trace, const MeasureFunction& f,
                               std::uint64_t burnin) {
    if (trace.steps() <= burnin)
        throw Error("trace too short: burn-in leaves no samples");
    double sum = 0.0;
    std::uint64_t n = 0;
    for (std::size_t t = burnin + 1; t < trace.nodes.size(); ++t) {
        sum += f(trace.nodes[t]);
        ++n;
    }
    return {sum / static_cast<double>(n), n, burnin};
}

EstimateReport uniform_mean(const Trace& trace, const MeasureFunction& f,
                            const Graph& graph, std::uint64_t burnin) {
    if (trace.steps() <= burnin)
        throw Error("trace too short: burn-in leaves no samples");
    double num = 0.0, den = 0.0;
    std::uint64_t n = 0;
    for (std::size_t t = burnin + 1; t < trace.nodes.size(); ++t) {
        const NodeId v = trace.nodes[t];
        const double k = static_cast<double>(graph.degree(v));
        num += f(v) / k;
        den += 1.0 / k;
        ++n;
    }
    return {num / den, n, burnin};
}

std::vector<double> empirical_distribution(std::span<const Trace> traces,
                                           std::size_t node_count,
                                           std::uint64_t burnin) {
    std::vector<std::uint64_t> counts(node_count, 0);
    std::uint64_t total = 0;
    for (const Trace& trace : traces) {
        for (std::size_t t = burnin; t < trace.nodes.size(); ++t) {
            ++counts[trace.nodes[t]];
            ++total;
        }
    }
    if (total == 0) throw Error("no samples after burn-in");
    std::vector<double> dist(node_count);
    for (std::size_t v = 0; v < node_count; ++v)
        dist[v] = static_cast<double>(counts[v]) / static_cast<double>(total);
    return dist;
}

double asymptotic_variance(std::span<const double> replicate_estimates,
                           std::uint64_t steps_per_replicate) {
    const std::size_t r = replicate_estimates.size();
    if (r < 2) throw Error("asymptotic variance needs at least two replicates");
    double mean = 0.0;
    for (double x : replicate_estimates) mean += x;
    mean /= static_cast<double>(r);
    double ss = 0.0;
    for (double x : replicate_estimates) ss += (x - mean) * (x - mean);
    const double var = ss / static_cast<double>(r - 1);
    return static_cast<double>(steps_per_replicate) * var;
}

} // namespace netsamp
