#pragma once

#include "netsamp/types.hpp"

#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace netsamp {

class Graph;

enum class AttributeKind { Numeric, Categorical };

// Per-node attribute columns. A column is numeric when every non-missing
// value in the source parses as a number, categorical otherwise. Categorical
// values are stored as codes into a per-column string table.
class AttributeTable {
public:
    AttributeTable() = default;
    explicit AttributeTable(std::size_t node_count) : node_count_(node_count) {}

    std::size_t node_count() const { return node_count_; }
    bool has_column(std::string_view name) const;
    std::vector<std::string> column_names() const;
    AttributeKind kind(std::string_view name) const; // throws Error if absent

    std::optional<double> numeric(std::string_view name, NodeId v) const;
    std::optional<std::int32_t> category(std::string_view name, NodeId v) const;
    const std::string& category_name(std::string_view name, std::int32_t code) const;

    void set_numeric(const std::string& name, NodeId v, double value);
    void set_category(const std::string& name, NodeId v, const std::string& value);

    // CSV with a header row; first column is the node id (matched against the
    // graph's original ids), remaining columns become attributes. Rows whose
    // id is not present in the graph are skipped.
    static AttributeTable load_csv(std::istream& in, const Graph& graph);

private:
    struct Column {
        AttributeKind kind = AttributeKind::Numeric;
        std::vector<double> numeric;
        std::vector<std::int32_t> category;
        std::vector<std::uint8_t> present;
        std::vector<std::string> category_names;
        std::unordered_map<std::string, std::int32_t> category_codes;
    };

    void grow(Column& col, NodeId v);
    Column& ensure_column(const std::string& name, AttributeKind kind);
    const Column* find(std::string_view name) const;

    std::size_t node_count_ = 0;
    std::vector<std::pair<std::string, Column>> columns_; // insertion order
};

} // namespace netsamp
