#include "maxlayers/io.hpp"

#include "maxlayers/errors.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <string_view>
#include <vector>

namespace maxlayers {

namespace {
auto trim(std::string_view s) -> std::string_view
{
    auto const first = s.find_first_not_of(" \t\r\n\v\f");
    if (first == std::string_view::npos) {
        return {};
    }
    auto const last = s.find_last_not_of(" \t\r\n\v\f");
    return s.substr(first, last - first + 1);
}

auto split_fields(std::string_view line) -> std::vector<std::string_view>
{
    std::vector<std::string_view> fields;
    if (line.find(',') != std::string_view::npos) {
        std::size_t start = 0;
        for (;;) {
            auto const comma = line.find(',', start);
            fields.push_back(trim(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
            if (comma == std::string_view::npos) {
                break;
            }
            start = comma + 1;
        }
        return fields;
    }
    std::size_t i = 0;
    while (i < line.size()) {
        auto const b = line.find_first_not_of(" \t\r\v\f", i);
        if (b == std::string_view::npos) {
            break;
        }
        auto e = line.find_first_of(" \t\r\v\f", b);
        if (e == std::string_view::npos) {
            e = line.size();
        }
        fields.push_back(line.substr(b, e - b));
        i = e;
    }
    return fields;
}

auto parse_value(std::string_view field, std::size_t line_no) -> double
{
    auto const at = "line " + std::to_string(line_no) + ": ";
    if (field.empty()) {
        throw InputError(at + "empty field", line_no);
    }
    std::string_view digits = field.front() == '+' ? field.substr(1) : field;
    double value = 0.0;
    auto const [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec == std::errc::result_out_of_range) {
        throw InputError(at + "value out of range '" + std::string(field) + "'", line_no);
    }
    if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
        throw InputError(at + "cannot parse '" + std::string(field) + "'", line_no);
    }
    if (!std::isfinite(value)) {
        throw InputError(at + "non-finite value '" + std::string(field) + "'", line_no);
    }
    return value;
}
} // namespace

auto read_points(std::istream& in) -> PointSet
{
    PointSet points;
    std::string line;
    std::vector<double> row;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto const content = trim(line);
        if (content.empty() || content.front() == '#') {
            continue;
        }
        auto const fields = split_fields(content);
        if (!points.empty() && fields.size() != points.dimension()) {
            throw InputError("line " + std::to_string(line_no) + ": expected " + std::to_string(points.dimension())
                                 + " values, got " + std::to_string(fields.size()),
                             line_no);
        }
        row.clear();
        for (auto f : fields) {
            row.push_back(parse_value(f, line_no));
        }
        points.push_back(row);
    }
    return points;
}

auto read_points_file(std::string const& path) -> PointSet
{
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open '" + path + "'");
    }
    return read_points(in);
}

void write_points(std::ostream& out, PointSet const& points)
{
    char buf[32];
    for (std::size_t i = 0; i < points.size(); ++i) {
        auto const c = points.coords(i);
        for (std::size_t j = 0; j < c.size(); ++j) {
            if (j > 0) {
                out << ',';
            }
            auto const res = std::to_chars(buf, buf + sizeof buf, c[j]);
            out.write(buf, res.ptr - buf);
        }
        out << '\n';
    }
}

} // namespace maxlayers
