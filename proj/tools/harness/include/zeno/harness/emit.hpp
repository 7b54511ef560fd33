#pragma once

#include <map>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace zeno::harness {

using Cell = std::variant<double, long long, std::string>;

/// Column-major description plus row data, emitted in insertion order.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::string> units; ///< one per column
    std::vector<std::vector<Cell>> rows;
    std::map<std::string, std::string> notes; ///< extra metadata for the sidecar

    void add_row(std::vector<Cell> row);
};

/// 17 significant digits, "%.17g"; identical bytes for identical doubles.
std::string format_double(double v);

void write_csv(std::ostream& os, const Table& t);
/// {"columns": [...], "rows": [[...], ...]} with the same number formatting as CSV.
void write_json(std::ostream& os, const Table& t);

/// Sidecar metadata: subcommand, version, units, notes and the resolved config.
std::string metadata_json(const std::string& subcommand, const Table& t, const std::string& config_json);

} // namespace zeno::harness
