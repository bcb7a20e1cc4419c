#include "netsamp/grouping.hpp"

#include "netsamp/rng.hpp"

#include <algorithm>
#include <charconv>
#include <map>

namespace netsamp {

GroupingStrategy GroupingStrategy::by_hash(std::uint32_t m) {
    if (m < 1) throw ConfigError("group count must be >= 1");
    return {Kind::Hash, m, {}};
}

GroupingStrategy GroupingStrategy::by_degree_quantile(std::uint32_t m) {
    if (m < 1) throw ConfigError("group count must be >= 1");
    return {Kind::DegreeQuantile, m, {}};
}

GroupingStrategy GroupingStrategy::by_attribute(std::string name, std::uint32_t m) {
    if (m < 1) throw ConfigError("group count must be >= 1");
    if (name.empty()) throw ConfigError("attribute grouping needs a column name");
    return {Kind::Attribute, m, std::move(name)};
}

namespace {

std::uint32_t parse_count(std::string_view text) {
    std::uint32_t m = 0;
    auto res = std::from_chars(text.data(), text.data() + text.size(), m);
    if (res.ec != std::errc{} || res.ptr != text.data() + text.size() || m == 0)
        throw ConfigError("bad group count: " + std::string(text));
    return m;
}

} // namespace

GroupingStrategy GroupingStrategy::parse(std::string_view text) {
    auto colon = text.find(':');
    std::string_view head = text.substr(0, colon);
    std::string_view rest = colon == std::string_view::npos ? std::string_view{}
                                                            : text.substr(colon + 1);
    if (head == "hash") {
        if (rest.empty()) throw ConfigError("hash grouping needs a group count, e.g. hash:2");
        return by_hash(parse_count(rest));
    }
    if (head == "degree") {
        if (rest.empty()) throw ConfigError("degree grouping needs a group count, e.g. degree:2");
        return by_degree_quantile(parse_count(rest));
    }
    if (head == "attr") {
        if (rest.empty()) throw ConfigError("attribute grouping needs a column, e.g. attr:age");
        auto colon2 = rest.find(':');
        if (colon2 == std::string_view::npos) return by_attribute(std::string(rest));
        return by_attribute(std::string(rest.substr(0, colon2)),
                            parse_count(rest.substr(colon2 + 1)));
    }
    throw ConfigError("unknown grouping strategy: " + std::string(text));
}

std::string GroupingStrategy::label() const {
    switch (kind) {
    case Kind::Hash: return "hash:" + std::to_string(group_count);
    case Kind::DegreeQuantile: return "degree:" + std::to_string(group_count);
    case Kind::Attribute: return "attr:" + attribute + ":" + std::to_string(group_count);
    }
    return {};
}

namespace {

// Contiguous near-equal split of an ordered list; the remainder goes to the
// earlier buckets. Empty buckets are not emitted.
void split_quantiles(const std::vector<NodeId>& ordered, std::uint32_t m,
                     NeighborPartition& out) {
    const std::size_t n = ordered.size();
    if (n == 0) return;
    const std::size_t q = n / m;
    const std::size_t r = n % m;
    std::size_t pos = 0;
    for (std::uint32_t b = 0; b < m && pos < n; ++b) {
        std::size_t len = q + (b < r ? 1 : 0);
        if (len == 0) break;
        out.emplace_back(ordered.begin() + static_cast<std::ptrdiff_t>(pos),
                         ordered.begin() + static_cast<std::ptrdiff_t>(pos + len));
        pos += len;
    }
}

} // namespace

NeighborPartition make_groups(const GroupingStrategy& strategy, NodeId /*v*/,
                              std::span<const NodeId> neighbors,
                              const AccessSession& session) {
    if (neighbors.empty()) throw Error("cannot group an empty neighbor list");
    NeighborPartition groups;

    switch (strategy.kind) {
    case GroupingStrategy::Kind::Hash: {
        groups.resize(strategy.group_count);
        for (NodeId w : neighbors) {
            const std::string& oid = session.original_id(w);
            std::uint64_t bucket = fnv1a64(oid.data(), oid.size()) % strategy.group_count;
            groups[bucket].push_back(w);
        }
        std::erase_if(groups, [](const auto& g) { return g.empty(); });
        break;
    }
    case GroupingStrategy::Kind::DegreeQuantile: {
        std::vector<NodeId> ordered(neighbors.begin(), neighbors.end());
        std::sort(ordered.begin(), ordered.end(), [&](NodeId a, NodeId b) {
            auto da = session.peek_degree(a), db = session.peek_degree(b);
            return da != db ? da < db : a < b;
        });
        split_quantiles(ordered, strategy.group_count, groups);
        break;
    }
    case GroupingStrategy::Kind::Attribute: {
        const auto& attrs = session.graph().attributes();
        std::vector<NodeId> missing;
        if (attrs.has_column(strategy.attribute) &&
            attrs.kind(strategy.attribute) == AttributeKind::Categorical) {
            // one group per category, ordered by category string
            std::map<std::string, std::vector<NodeId>> by_value;
            for (NodeId w : neighbors) {
                auto code = session.peek_category(w, strategy.attribute);
                if (!code) missing.push_back(w);
                else by_value[attrs.category_name(strategy.attribute, *code)].push_back(w);
            }
            for (auto& [value, members] : by_value) groups.push_back(std::move(members));
        } else {
            std::vector<std::pair<double, NodeId>> valued;
            for (NodeId w : neighbors) {
                auto val = session.peek_numeric(w, strategy.attribute);
                if (!val) missing.push_back(w);
                else valued.emplace_back(*val, w);
            }
            std::sort(valued.begin(), valued.end());
            std::vector<NodeId> ordered;
            ordered.reserve(valued.size());
            for (const auto& [val, w] : valued) ordered.push_back(w);
            split_quantiles(ordered, strategy.group_count, groups);
        }
        if (!missing.empty()) groups.push_back(std::move(missing));
        break;
    }
    }
    return groups;
}

} // namespace netsamp
