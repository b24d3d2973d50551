#include "maxlayers/report.hpp"

#include "maxlayers/errors.hpp"

#include <charconv>
#include <ostream>

#include <json.hpp>

namespace maxlayers {

auto to_json_line(ExperimentRecord const& record) -> std::string
{
    nlohmann::json j;
    j["generator"] = to_string(record.spec);
    j["n"] = record.spec.n;
    j["k"] = record.spec.k;
    j["mode"] = record.mode;
    j["seed"] = record.seed;
    j["metrics"] = {
        {"nodes_visited", record.metrics.nodes_visited},
        {"orthant_evaluations", record.metrics.orthant_evaluations},
        {"coordinate_comparisons", record.metrics.coordinate_comparisons},
        {"above_calls", record.metrics.above_calls},
        {"max_fanout", record.metrics.max_fanout},
    };
    j["derived"] = record.derived;
    if (record.wall_time >= 0.0) {
        j["wall_time_s"] = record.wall_time;
    }
    return j.dump();
}

Table::Table(std::vector<std::string> columns)
    : columns_(std::move(columns))
{
}

void Table::add_row(std::vector<std::string> cells)
{
    if (cells.size() != columns_.size()) {
        throw ContractError("table row has " + std::to_string(cells.size()) + " cells, expected "
                            + std::to_string(columns_.size()));
    }
    rows_.push_back(std::move(cells));
}

void Table::write(std::ostream& os, OutputFormat format) const
{
    if (format == OutputFormat::Csv) {
        auto line = [&](std::vector<std::string> const& cells) {
            for (std::size_t i = 0; i < cells.size(); ++i) {
                os << (i > 0 ? "," : "") << cells[i];
            }
            os << '\n';
        };
        line(columns_);
        for (auto const& r : rows_) {
            line(r);
        }
        return;
    }
    for (auto const& r : rows_) {
        nlohmann::ordered_json j;
        for (std::size_t i = 0; i < columns_.size(); ++i) {
            j[columns_[i]] = r[i];
        }
        os << j.dump() << '\n';
    }
}

auto format_double(double value) -> std::string
{
    char buf[32];
    auto const res = std::to_chars(buf, buf + sizeof buf, value);
    return {buf, res.ptr};
}

} // namespace maxlayers
