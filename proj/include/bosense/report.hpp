// report.hpp — deterministic machine-readable reports: CSV with a resolved
// config header block, plus an optional JSON mirror.

#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace bosense {

// 12 significant digits, %g-style shortest form; the report number format.
std::string format_number(double v);

using Cell = std::variant<double, long, std::string>;

struct ReportTable {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add_row(std::vector<Cell> cells);
};

struct ReportMeta {
    std::string command;
    std::uint64_t digest = 0;
    // Full resolved config, one "section.key = value" line per entry.
    std::vector<std::string> resolved;
    // Free-form summary lines appended to the comment block.
    std::vector<std::string> notes;
};

std::string render_csv(const ReportMeta& meta, const ReportTable& table);
std::string render_json(const ReportMeta& meta, const ReportTable& table);

// Writes report.csv (and report.json when json_mirror) under dir, creating
// it if needed. Returns the paths written.
std::vector<std::string> write_report(const std::string& dir, const ReportMeta& meta,
                                      const ReportTable& table, bool json_mirror);

} // namespace bosense
