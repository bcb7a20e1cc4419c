#include "netsamp/attributes.hpp"

#include "netsamp/csv.hpp"
#include "netsamp/graph.hpp"

#include <charconv>
#include <cstdlib>

namespace netsamp {

namespace {

bool parse_number(const std::string& s, double& out) {
    if (s.empty()) return false;
    const char* begin = s.c_str();
    char* end = nullptr;
    out = std::strtod(begin, &end);
    return end == begin + s.size();
}

} // namespace

bool AttributeTable::has_column(std::string_view name) const {
    return find(name) != nullptr;
}

std::vector<std::string> AttributeTable::column_names() const {
    std::vector<std::string> names;
    names.reserve(columns_.size());
    for (const auto& [name, col] : columns_) names.push_back(name);
    return names;
}

AttributeKind AttributeTable::kind(std::string_view name) const {
    const Column* col = find(name);
    if (!col) throw Error("unknown attribute column: " + std::string(name));
    return col->kind;
}

std::optional<double> AttributeTable::numeric(std::string_view name, NodeId v) const {
    const Column* col = find(name);
    if (!col || col->kind != AttributeKind::Numeric) return std::nullopt;
    if (v >= col->present.size() || !col->present[v]) return std::nullopt;
    return col->numeric[v];
}

std::optional<std::int32_t> AttributeTable::category(std::string_view name, NodeId v) const {
    const Column* col = find(name);
    if (!col || col->kind != AttributeKind::Categorical) return std::nullopt;
    if (v >= col->present.size() || !col->present[v]) return std::nullopt;
    return col->category[v];
}

const std::string& AttributeTable::category_name(std::string_view name,
                                                 std::int32_t code) const {
    const Column* col = find(name);
    if (!col || col->kind != AttributeKind::Categorical)
        throw Error("not a categorical column: " + std::string(name));
    return col->category_names[static_cast<std::size_t>(code)];
}

void AttributeTable::set_numeric(const std::string& name, NodeId v, double value) {
    Column& col = ensure_column(name, AttributeKind::Numeric);
    grow(col, v);
    col.numeric[v] = value;
    col.present[v] = 1;
}

void AttributeTable::set_category(const std::string& name, NodeId v,
                                  const std::string& value) {
    Column& col = ensure_column(name, AttributeKind::Categorical);
    grow(col, v);
    auto [it, inserted] =
        col.category_codes.emplace(value, static_cast<std::int32_t>(col.category_names.size()));
    if (inserted) col.category_names.push_back(value);
    col.category[v] = it->second;
    col.present[v] = 1;
}

void AttributeTable::grow(Column& col, NodeId v) {
    if (v >= node_count_) node_count_ = v + 1;
    if (col.present.size() <= v) {
        col.numeric.resize(node_count_, 0.0);
        col.category.resize(node_count_, -1);
        col.present.resize(node_count_, 0);
    }
}

AttributeTable::Column& AttributeTable::ensure_column(const std::string& name,
                                                      AttributeKind kind) {
    for (auto& [n, col] : columns_) {
        if (n == name) {
            if (col.kind != kind) throw Error("attribute column kind mismatch: " + name);
            return col;
        }
    }
    Column col;
    col.kind = kind;
    col.numeric.assign(node_count_, 0.0);
    col.category.assign(node_count_, -1);
    col.present.assign(node_count_, 0);
    columns_.emplace_back(name, std::move(col));
    return columns_.back().second;
}

const AttributeTable::Column* AttributeTable::find(std::string_view name) const {
    for (const auto& [n, col] : columns_)
        if (n == name) return &col;
    return nullptr;
}

AttributeTable AttributeTable::load_csv(std::istream& in, const Graph& graph) {
    std::vector<std::string> header;
    if (!csv::read_record(in, header) || header.size() < 2)
        throw Error("attribute CSV needs a header with an id column and at least one attribute");

    const std::size_t ncols = header.size();
    std::vector<std::vector<std::pair<NodeId, std::string>>> raw(ncols - 1);

    std::vector<std::string> fields;
    std::size_t lineno = 1;
    while (csv::read_record(in, fields)) {
        ++lineno;
        if (fields.size() == 1 && fields[0].empty()) continue; // trailing blank line
        if (fields.size() != ncols)
            throw ParseError("attribute row has wrong field count", lineno);
        auto node = graph.find_original(fields[0]);
        if (!node) continue; // id not in graph (e.g. pruned by LCC)
        for (std::size_t c = 1; c < ncols; ++c)
            if (!fields[c].empty())
                raw[c - 1].emplace_back(*node, fields[c]);
    }

    AttributeTable table(graph.node_count());
    for (std::size_t c = 0; c < ncols - 1; ++c) {
        bool all_numeric = !raw[c].empty();
        double tmp;
        for (const auto& [node, text] : raw[c]) {
            if (!parse_number(text, tmp)) {
                all_numeric = false;
                break;
            }
        }
        const std::string& name = header[c + 1];
        for (const auto& [node, text] : raw[c]) {
            if (all_numeric) {
                parse_number(text, tmp);
                table.set_numeric(name, node, tmp);
            } else {
                table.set_category(name, node, text);
            }
        }
    }
    return table;
}

} // namespace netsamp
