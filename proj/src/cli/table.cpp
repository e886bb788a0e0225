#include "table.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace latdet::cli {

namespace {

template <class Format>
std::string render(const Cell& c, Format fmt) {
    return std::visit(
        [&](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::monostate>) {
                return {};
            } else if constexpr (std::is_same_v<T, double>) {
                return fmt(v);
            } else if constexpr (std::is_same_v<T, std::int64_t>) {
                return std::to_string(v);
            } else {
                return v;
            }
        },
        c);
}

nlohmann::ordered_json to_json(const Cell& c) {
    return std::visit(
        [](const auto& v) -> nlohmann::ordered_json {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::monostate>) {
                return nullptr;
            } else if constexpr (std::is_same_v<T, double>) {
                if (!std::isfinite(v)) return nullptr;
                return v;
            } else {
                return v;
            }
        },
        c);
}

}  // namespace

void Table::add_row(std::vector<Cell> row) {
    if (row.size() != columns.size()) {
        throw std::logic_error("table row has " + std::to_string(row.size()) + " cells, expected " +
                               std::to_string(columns.size()));
    }
    rows.push_back(std::move(row));
}

std::string format_exact(double x) {
    char buf[32];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return ec == std::errc{} ? std::string(buf, end) : std::string("nan");
}

std::string format_report(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return buf;
}

void write_csv(const Table& t, std::ostream& out) {
    for (std::size_t i = 0; i < t.columns.size(); ++i) out << (i ? "," : "") << t.columns[i];
    out << '\n';
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << render(row[i], format_exact);
        out << '\n';
    }
}

void write_json(const Table& t, const nlohmann::ordered_json& meta, std::ostream& out) {
    nlohmann::ordered_json doc;
    doc["meta"] = meta;
    if (!t.summary.empty()) {
        auto& s = doc["meta"]["summary"];
        s = nlohmann::ordered_json::object();
        for (const auto& [k, v] : t.summary) s[k] = to_json(v);
    }
    auto data = nlohmann::ordered_json::array();
    for (const auto& row : t.rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < row.size(); ++i) obj[t.columns[i]] = to_json(row[i]);
        data.push_back(std::move(obj));
    }
    doc["data"] = std::move(data);
    out << doc.dump(2) << '\n';
}

void write_report(const Table& t, std::ostream& out) {
    if (t.rows.size() == 1) {
        // a single result reads better as name/value lines
        std::size_t w = 0;
        for (const auto& c : t.columns) w = std::max(w, c.size());
        for (const auto& [k, v] : t.summary) w = std::max(w, k.size());
        for (std::size_t i = 0; i < t.columns.size(); ++i) {
            out << t.columns[i] << std::string(w + 2 - t.columns[i].size(), ' ')
                << render(t.rows[0][i], format_report) << '\n';
        }
        for (const auto& [k, v] : t.summary) {
            out << k << std::string(w + 2 - k.size(), ' ') << render(v, format_report) << '\n';
        }
        return;
    }

    std::vector<std::vector<std::string>> cells;
    std::vector<std::size_t> width(t.columns.size());
    for (std::size_t i = 0; i < t.columns.size(); ++i) width[i] = t.columns[i].size();
    for (const auto& row : t.rows) {
        auto& line = cells.emplace_back();
        for (std::size_t i = 0; i < row.size(); ++i) {
            line.push_back(render(row[i], format_report));
            width[i] = std::max(width[i], line.back().size());
        }
    }
    auto emit = [&](const std::vector<std::string>& line) {
        for (std::size_t i = 0; i < line.size(); ++i) {
            if (i) out << "  ";
            out << std::string(width[i] - line[i].size(), ' ') << line[i];
        }
        out << '\n';
    };
    emit(t.columns);
    for (const auto& line : cells) emit(line);
    if (!t.summary.empty()) {
        out << '\n';
        std::size_t w = 0;
        for (const auto& [k, v] : t.summary) w = std::max(w, k.size());
        for (const auto& [k, v] : t.summary) {
            out << k << std::string(w + 2 - k.size(), ' ') << render(v, format_report) << '\n';
        }
    }
}

}  // namespace latdet::cli
