#include "netsamp/estimation.hpp"

#include "netsamp/metrics.hpp"

#include "test_helpers.hpp"

#include <doctest.h>

using namespace netsamp;
using testing::random_connected_graph;

namespace {

Trace trace_of(std::initializer_list<NodeId> nodes) {
    Trace t;
    t.nodes.assign(nodes);
    t.queries_after.assign(t.nodes.size(), 0);
    return t;
}

Trace srw_trace(const Graph& g, NodeId start, std::uint64_t steps, std::uint64_t seed) {
    AccessSession session(g);
    return walk({WalkerKind::Srw, std::nullopt, GroupWeighting::RemainingCount}, start,
                WalkLimit::steps(steps), session, seed);
}

} // namespace

TEST_CASE("stationary_mean of a constant function is exact") {
    Graph g = testing::k3(); // 2-regular
    Trace t = srw_trace(g, 0, 500, 1);
    auto f = MeasureFunction::degree(g);
    auto report = stationary_mean(t, f);
    CHECK(report.estimate == 2.0);
    CHECK(report.n_used == 500);
    CHECK(report.burnin_discarded == 0);
}

TEST_CASE("stationary_mean matches the degree-weighted closed form on the star") {
    Graph g = testing::star4();
    auto f = MeasureFunction::degree(g);
    // E_pi[degree] = sum k^2 / sum k = (9 + 1 + 1 + 1) / 6 = 2
    Trace t = srw_trace(g, 0, 200000, 3);
    CHECK(stationary_mean(t, f).estimate == doctest::Approx(2.0).epsilon(0.01));
}

TEST_CASE("uniform_mean converges to the plain node average") {
    Graph g = testing::star4();
    auto f = MeasureFunction::degree(g);
    // uniform mean of degrees = (3 + 1 + 1 + 1) / 4 = 1.5
    Trace t = srw_trace(g, 0, 200000, 4);
    CHECK(uniform_mean(t, f, g).estimate == doctest::Approx(1.5).epsilon(0.01));
}

TEST_CASE("uniform_mean of a constant is that constant") {
    Graph g = random_connected_graph(15, 20, 5);
    MeasureFunction c("const", [](NodeId) { return 7.5; });
    Trace t = srw_trace(g, 0, 300, 6);
    CHECK(uniform_mean(t, c, g).estimate == doctest::Approx(7.5).epsilon(1e-12));
}

TEST_CASE("uniform_mean equals stationary_mean on a regular graph") {
    Graph g = testing::k3();
    MeasureFunction f("node-value", [](NodeId v) { return static_cast<double>(v * v); });
    Trace t = srw_trace(g, 0, 4000, 7);
    CHECK(uniform_mean(t, f, g).estimate ==
          doctest::Approx(stationary_mean(t, f).estimate).epsilon(1e-12));
}

TEST_CASE("estimators reject a burn-in that swallows the whole trace") {
    Graph g = testing::k3();
    Trace t = srw_trace(g, 0, 10, 8);
    auto f = MeasureFunction::degree(g);
    CHECK_THROWS_AS(stationary_mean(t, f, 10), Error);
    CHECK_THROWS_AS(uniform_mean(t, f, g, 10), Error);
    CHECK_NOTHROW(stationary_mean(t, f, 9));
}

TEST_CASE("estimates are invariant under node relabeling") {
    // same path graph loaded with different id orders
    Graph g1 = testing::graph_from_text("a b\nb c\n");
    Graph g2 = testing::graph_from_text("c b\nb a\n");
    auto f1 = MeasureFunction::degree(g1);
    auto f2 = MeasureFunction::degree(g2);
    Trace t1 = srw_trace(g1, *g1.find_original("a"), 5000, 11);
    Trace t2 = srw_trace(g2, *g2.find_original("a"), 5000, 11);
    CHECK(stationary_mean(t1, f1).estimate ==
          doctest::Approx(stationary_mean(t2, f2).estimate).epsilon(1e-12));
}

TEST_CASE("stationary_mean stays within the range of f") {
    Graph g = random_connected_graph(25, 30, 13);
    auto f = MeasureFunction::degree(g);
    double lo = 1e300, hi = -1e300;
    for (NodeId v = 0; v < g.node_count(); ++v) {
        lo = std::min(lo, f(v));
        hi = std::max(hi, f(v));
    }
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Trace t = srw_trace(g, 0, 200, seed);
        double est = stationary_mean(t, f).estimate;
        CHECK(est >= lo);
        CHECK(est <= hi);
    }
}

TEST_CASE("empirical_distribution counts nodes including the start") {
    Trace t = trace_of({0, 1, 0, 1});
    const Trace* p = &t;
    auto dist = empirical_distribution({p, 1}, 2);
    CHECK(dist[0] == doctest::Approx(0.5));
    CHECK(dist[1] == doctest::Approx(0.5));
}

TEST_CASE("empirical_distribution normalizes over the effective sample count") {
    Trace a = trace_of({0, 1, 2});
    Trace b = trace_of({2, 2, 2}); // mhrw-style repeats allowed
    std::vector<Trace> traces{a, b};
    auto dist = empirical_distribution(traces, 3, 1); // drop first node of each
    // samples: {1,2} and {2,2} -> counts 0:0, 1:1, 2:3
    CHECK(dist[0] == doctest::Approx(0.0));
    CHECK(dist[1] == doctest::Approx(0.25));
    CHECK(dist[2] == doctest::Approx(0.75));
}

TEST_CASE("empirical_distribution on K3 approaches symmetry") {
    Graph g = testing::k3();
    std::vector<Trace> traces;
    for (std::uint64_t r = 0; r < 4; ++r)
        traces.push_back(srw_trace(g, static_cast<NodeId>(r % 3), 100000, 100 + r));
    auto dist = empirical_distribution(traces, 3);
    for (double p : dist) CHECK(p == doctest::Approx(1.0 / 3).epsilon(0.02));
}

TEST_CASE("asymptotic_variance: constant replicates give zero") {
    std::vector<double> estimates(10, 0.75);
    CHECK(asymptotic_variance(estimates, 1000) == doctest::Approx(0.0));
}

TEST_CASE("asymptotic_variance recovers p(1-p) for iid coin flips") {
    // a degenerate "walk" of n iid Bernoulli(p) draws per replicate
    const double p = 0.3;
    const std::uint64_t n = 4000;
    Rng rng(21);
    std::vector<double> estimates;
    for (int rep = 0; rep < 600; ++rep) {
        std::uint64_t heads = 0;
        for (std::uint64_t i = 0; i < n; ++i)
            if (rng.unit() < p) ++heads;
        estimates.push_back(static_cast<double>(heads) / static_cast<double>(n));
    }
    CHECK(asymptotic_variance(estimates, n) == doctest::Approx(p * (1 - p)).epsilon(0.15));
}

TEST_CASE("asymptotic_variance requires two replicates") {
    std::vector<double> one{0.5};
    CHECK_THROWS_AS(asymptotic_variance(one, 10), Error);
}

TEST_CASE("measure functions: missing numeric attribute is an error") {
    Graph g = testing::graph_from_text("u1 u2\nu2 u3\n");
    std::istringstream csv("id,age\nu1,30\nu2,40\n"); // u3 missing
    g.attach_attributes(AttributeTable::load_csv(csv, g));
    auto f = MeasureFunction::attribute(g, "age");
    CHECK(f(*g.find_original("u1")) == 30.0);
    CHECK_THROWS_AS(f(*g.find_original("u3")), Error);
    CHECK_THROWS_AS(MeasureFunction::attribute(g, "height"), Error);
}

TEST_CASE("indicator measure flags the configured set") {
    Graph g = testing::k3();
    auto f = MeasureFunction::indicator("in-set", {0, 1, 0});
    CHECK(f(0) == 0.0);
    CHECK(f(1) == 1.0);
    CHECK(f(2) == 0.0);
}
