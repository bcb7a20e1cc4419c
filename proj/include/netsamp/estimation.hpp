#pragma once

#include "netsamp/graph.hpp"
#include "netsamp/types.hpp"
#include "netsamp/walkers.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace netsamp {

// Named node -> real property function. Throws on nodes where the property is
// undefined (a missing numeric attribute is an error, never silently 0).
class MeasureFunction {
public:
    MeasureFunction(std::string name, std::function<double(NodeId)> fn)
        : name_(std::move(name)), fn_(std::move(fn)) {}

    double operator()(NodeId v) const { return fn_(v); }
    const std::string& name() const { return name_; }

    static MeasureFunction degree(const Graph& graph);
    static MeasureFunction attribute(const Graph& graph, const std::string& column);
    // Indicator of a node set, by dense node membership flags.
    static MeasureFunction indicator(std::string name, std::vector<std::uint8_t> member);

private:
    std::string name_;
    std::function<double(NodeId)> fn_;
};

struct EstimateReport {
    double estimate = 0.0;
    std::uint64_t n_used = 0;
    std::uint64_t burnin_discarded = 0;
};

// Mean of f over the samples X_t, t > burnin; estimates the walk-stationary
// expectation of f. Requires trace.steps() > burnin.
EstimateReport stationary_mean(const Trace& trace, const MeasureFunction& f,
                               std::uint64_t burnin = 0);

// Degree-reweighted ratio estimator (sum f/k) / (sum 1/k) over the same
// sample range; estimates the uniform-over-nodes mean of f under a
// degree-proportional walk.
EstimateReport uniform_mean(const Trace& trace, const MeasureFunction& f,
                            const Graph& graph, std::uint64_t burnin = 0);

// Normalized visit counts over all graph nodes, pooling every trace and
// counting nodes X_t with t >= burnin (the start node counts at burnin 0).
std::vector<double> empirical_distribution(std::span<const Trace> traces,
                                           std::size_t node_count,
                                           std::uint64_t burnin = 0);

// Finite-n plug-in for the asymptotic variance: n x sample variance of the
// replicate estimates. Needs at least two replicates over a common n.
double asymptotic_variance(std::span<const double> replicate_estimates,
                           std::uint64_t steps_per_replicate);

} // namespace netsamp
