#ifndef MAXLAYERS_REPORT_HPP
#define MAXLAYERS_REPORT_HPP

#include "maxlayers/generators.hpp"
#include "maxlayers/metrics.hpp"

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace maxlayers {

// One experiment cell, reproducible from (spec, mode, seed).
struct ExperimentRecord {
    GeneratorSpec spec;
    std::string mode;
    std::uint64_t seed = 0;
    QueryMetrics metrics;
    std::map<std::string, double> derived;
    // Omitted from the serialized form when negative.
    double wall_time = -1.0;
};

// Single-line JSON object with sorted keys.
[[nodiscard]] auto to_json_line(ExperimentRecord const& record) -> std::string;

enum class OutputFormat { Csv, JsonLines };

// A flat table of strings. Written as CSV (header row first) or as one JSON
// object per row keyed by column name.
class Table {
public:
    explicit Table(std::vector<std::string> columns);

    void add_row(std::vector<std::string> cells);
    [[nodiscard]] auto columns() const noexcept -> std::vector<std::string> const& { return columns_; }
    [[nodiscard]] auto rows() const noexcept -> std::vector<std::vector<std::string>> const& { return rows_; }

    void write(std::ostream& os, OutputFormat format) const;

private:
    std::vector<std::string> columns_;
    std::vector<std::vector<std::string>> rows_;
};

// Shortest round-trip decimal form.
[[nodiscard]] auto format_double(double value) -> std::string;

} // namespace maxlayers

#endif
