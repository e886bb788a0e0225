#pragma once

// Column-oriented result tables and their three renderings.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"

namespace latdet::cli {

/// Empty cells (std::monostate) print as nothing in CSV and null in JSON.
using Cell = std::variant<std::monostate, double, std::int64_t, std::string>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    /// Scalar results that are not per-row (printed after the rows in a
    /// report, stored under meta.summary in JSON, omitted from CSV).
    std::vector<std::pair<std::string, Cell>> summary;

    void add_row(std::vector<Cell> row);
};

/// Shortest decimal that reads back to the same double.
std::string format_exact(double x);
/// Ten significant digits.
std::string format_report(double x);

void write_csv(const Table& t, std::ostream& out);
void write_json(const Table& t, const nlohmann::ordered_json& meta, std::ostream& out);
void write_report(const Table& t, std::ostream& out);

}  // namespace latdet::cli
