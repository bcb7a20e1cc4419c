#include "netsamp/graph.hpp"

#include <algorithm>
#include <fstream>
#include <queue>
#include <sstream>
#include <utility>

namespace netsamp {

Graph Graph::build(std::size_t node_count,
                   std::vector<std::pair<NodeId, NodeId>> edges,
                   std::vector<std::string> original_ids) {
    // Canonicalize: undirected (u < v), dedup, no self-loops.
    for (auto& e : edges) {
        if (e.first > e.second) std::swap(e.first, e.second);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges.erase(std::remove_if(edges.begin(), edges.end(),
                               [](const auto& e) { return e.first == e.second; }),
                edges.end());

    Graph g;
    g.edge_count_ = edges.size();
    g.original_ids_ = std::move(original_ids);

    std::vector<std::uint32_t> deg(node_count, 0);
    for (const auto& [u, v] : edges) {
        ++deg[u];
        ++deg[v];
    }
    g.offsets_.assign(node_count + 1, 0);
    for (std::size_t i = 0; i < node_count; ++i)
        g.offsets_[i + 1] = g.offsets_[i] + deg[i];
    g.adjacency_.resize(g.offsets_.back());

    std::vector<std::uint64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (const auto& [u, v] : edges) {
        g.adjacency_[cursor[u]++] = v;
        g.adjacency_[cursor[v]++] = u;
    }
    for (std::size_t i = 0; i < node_count; ++i)
        std::sort(g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[i]),
                  g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[i + 1]));

    g.original_to_dense_.reserve(node_count);
    for (std::size_t i = 0; i < g.original_ids_.size(); ++i)
        g.original_to_dense_.emplace(g.original_ids_[i], static_cast<NodeId>(i));
    return g;
}

bool Graph::has_edge(NodeId u, NodeId v) const {
    if (!contains(u) || !contains(v)) return false;
    auto ns = neighbors(u);
    return std::binary_search(ns.begin(), ns.end(), v);
}

std::optional<NodeId> Graph::find_original(std::string_view id) const {
    auto it = original_to_dense_.find(std::string(id));
    if (it == original_to_dense_.end()) return std::nullopt;
    return it->second;
}

void Graph::attach_attributes(AttributeTable table) {
    if (table.node_count() != node_count())
        throw Error("attribute table size does not match graph");
    attributes_ = std::move(table);
}

Graph load_edge_list(std::istream& in, EdgePolicy policy) {
    std::unordered_map<std::string, NodeId> ids;
    std::vector<std::string> originals;
    auto intern = [&](const std::string& tok) -> NodeId {
        auto [it, inserted] = ids.emplace(tok, static_cast<NodeId>(originals.size()));
        if (inserted) originals.push_back(tok);
        return it->second;
    };

    std::vector<std::pair<NodeId, NodeId>> directed;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        if (line[start] == '#') continue;

        std::istringstream ls(line);
        std::string a, b, extra;
        if (!(ls >> a >> b))
            throw ParseError("expected two node tokens", lineno);
        if (ls >> extra)
            throw ParseError("expected exactly two node tokens", lineno);
        NodeId ua = intern(a);
        NodeId ub = intern(b);
        if (ua == ub) continue; // self-loop
        directed.emplace_back(ua, ub);
    }

    std::vector<std::pair<NodeId, NodeId>> edges;
    if (policy == EdgePolicy::Either) {
        edges = std::move(directed);
    } else {
        auto seen = directed;
        std::sort(seen.begin(), seen.end());
        seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
        for (const auto& [u, v] : seen) {
            if (u < v && std::binary_search(seen.begin(), seen.end(), std::make_pair(v, u)))
                edges.emplace_back(u, v);
        }
    }

    const std::size_t node_count = originals.size();
    Graph g = Graph::build(node_count, std::move(edges), std::move(originals));
    if (g.edge_count() == 0)
        throw Error("edge list produced an empty graph");
    return g;
}

Graph load_edge_list_file(const std::string& path, EdgePolicy policy) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open edge list file: " + path);
    return load_edge_list(in, policy);
}

Graph largest_connected_component(const Graph& g) {
    const std::size_t n = g.node_count();
    std::vector<std::int32_t> comp(n, -1);
    std::int32_t ncomp = 0;
    std::vector<std::size_t> size;
    std::queue<NodeId> q;
    for (NodeId s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        comp[s] = ncomp;
        size.push_back(0);
        q.push(s);
        while (!q.empty()) {
            NodeId u = q.front();
            q.pop();
            ++size[static_cast<std::size_t>(ncomp)];
            for (NodeId v : g.neighbors(u)) {
                if (comp[v] < 0) {
                    comp[v] = ncomp;
                    q.push(v);
                }
            }
        }
        ++ncomp;
    }

    // Components are discovered in order of their minimum node id, so the
    // first strictly-largest one wins ties toward the smallest id.
    std::int32_t best = 0;
    for (std::int32_t c = 1; c < ncomp; ++c)
        if (size[static_cast<std::size_t>(c)] > size[static_cast<std::size_t>(best)]) best = c;

    std::vector<NodeId> remap(n, 0);
    std::vector<std::string> originals;
    for (NodeId v = 0; v < n; ++v) {
        if (comp[v] == best) {
            remap[v] = static_cast<NodeId>(originals.size());
            originals.push_back(g.original_id(v));
        }
    }
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (NodeId u = 0; u < n; ++u) {
        if (comp[u] != best) continue;
        for (NodeId v : g.neighbors(u))
            if (u < v) edges.emplace_back(remap[u], remap[v]);
    }
    const std::size_t kept = originals.size();
    return Graph::build(kept, std::move(edges), std::move(originals));
}

namespace {

std::vector<std::string> decimal_ids(std::size_t n) {
    std::vector<std::string> ids;
    ids.reserve(n);
    for (std::size_t i = 0; i < n; ++i) ids.push_back(std::to_string(i));
    return ids;
}

void add_clique(std::vector<std::pair<NodeId, NodeId>>& edges, std::size_t offset,
                std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            edges.emplace_back(static_cast<NodeId>(offset + i),
                               static_cast<NodeId>(offset + j));
}

} // namespace

Graph gen_barbell(std::size_t n1, std::size_t n2) {
    if (n1 < 2 || n2 < 2)
        throw ConfigError("barbell sides must each have at least 2 nodes");
    std::vector<std::pair<NodeId, NodeId>> edges;
    edges.reserve(n1 * (n1 - 1) / 2 + n2 * (n2 - 1) / 2 + 1);
    add_clique(edges, 0, n1);
    add_clique(edges, n1, n2);
    auto [u, w] = barbell_bridge(n1);
    edges.emplace_back(u, w);
    return Graph::build(n1 + n2, std::move(edges), decimal_ids(n1 + n2));
}

Graph gen_clustered(std::span<const std::size_t> sizes) {
    if (sizes.empty()) throw ConfigError("clustered graph needs at least one cluster");
    std::size_t total = 0;
    for (std::size_t s : sizes) {
        if (s < 2) throw ConfigError("cluster sizes must each be at least 2");
        total += s;
    }
    std::vector<std::pair<NodeId, NodeId>> edges;
    std::size_t offset = 0;
    std::size_t prev_low = 0;
    for (std::size_t k = 0; k < sizes.size(); ++k) {
        add_clique(edges, offset, sizes[k]);
        if (k > 0)
            edges.emplace_back(static_cast<NodeId>(prev_low),
                               static_cast<NodeId>(offset));
        prev_low = offset;
        offset += sizes[k];
    }
    return Graph::build(total, std::move(edges), decimal_ids(total));
}

std::vector<double> true_stationary(const Graph& g) {
    if (g.edge_count() == 0) throw Error("stationary distribution needs at least one edge");
    std::vector<double> pi(g.node_count());
    const double denom = 2.0 * static_cast<double>(g.edge_count());
    for (NodeId v = 0; v < g.node_count(); ++v)
        pi[v] = static_cast<double>(g.degree(v)) / denom;
    return pi;
}

} // namespace netsamp
