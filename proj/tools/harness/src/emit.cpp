#include "zeno/harness/emit.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include <json.hpp>

#ifndef ZENO_VERSION
#define ZENO_VERSION "unknown"
#endif

namespace zeno::harness {

void Table::add_row(std::vector<Cell> row) {
    if (row.size() != columns.size()) throw std::logic_error("row width does not match the header");
    rows.push_back(std::move(row));
}

std::string format_double(double v) {
    if (v == 0.0) return "0"; // folds -0
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

std::string csv_cell(const Cell& c) {
    if (const auto* d = std::get_if<double>(&c)) return format_double(*d);
    if (const auto* i = std::get_if<long long>(&c)) return std::to_string(*i);
    return std::get<std::string>(c);
}

std::string json_cell(const Cell& c) {
    if (const auto* d = std::get_if<double>(&c)) {
        if (!std::isfinite(*d)) return "null";
        return format_double(*d);
    }
    if (const auto* i = std::get_if<long long>(&c)) return std::to_string(*i);
    return nlohmann::json(std::get<std::string>(c)).dump();
}

} // namespace

void write_csv(std::ostream& os, const Table& t) {
    for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
    os << '\n';
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_cell(row[i]);
        os << '\n';
    }
}

void write_json(std::ostream& os, const Table& t) {
    os << "{\"columns\":" << nlohmann::json(t.columns).dump() << ",\"rows\":[";
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        os << (r ? ",\n" : "\n") << '[';
        for (std::size_t i = 0; i < t.rows[r].size(); ++i) os << (i ? "," : "") << json_cell(t.rows[r][i]);
        os << ']';
    }
    os << "\n]}\n";
}

std::string metadata_json(const std::string& subcommand, const Table& t, const std::string& config_json) {
    nlohmann::json meta;
    meta["subcommand"] = subcommand;
    meta["version"] = ZENO_VERSION;
    meta["units"] = {{"time", "1/xi"}, {"energy", "xi"}, {"length", "lattice sites"}};
    nlohmann::json cols = nlohmann::json::array();
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
        cols.push_back({{"name", t.columns[i]}, {"unit", i < t.units.size() ? t.units[i] : ""}});
    }
    meta["columns"] = cols;
    meta["notes"] = t.notes;
    meta["config"] = nlohmann::json::parse(config_json);
    return meta.dump(2) + "\n";
}

} // namespace zeno::harness
