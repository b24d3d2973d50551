#include "cli/grid.hpp"

#include "maxlayers/errors.hpp"

#include <algorithm>
#include <charconv>

namespace maxlayers::cli {

namespace {
auto split(std::string_view text, char sep) -> std::vector<std::string_view>
{
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        auto const pos = text.find(sep, start);
        out.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) {
            return out;
        }
        start = pos + 1;
    }
}
} // namespace

Grid::Grid(std::string_view text, std::vector<std::string> allowed_keys)
{
    if (text.empty()) {
        return;
    }
    for (auto part : split(text, ';')) {
        if (part.empty()) {
            continue;
        }
        auto const eq = part.find('=');
        if (eq == std::string_view::npos || eq == 0 || eq + 1 == part.size()) {
            throw InputError("grid: expected key=values, got '" + std::string(part) + "'");
        }
        std::string key(part.substr(0, eq));
        if (std::ranges::find(allowed_keys, key) == allowed_keys.end()) {
            throw InputError("grid: unknown key '" + key + "'");
        }
        auto& values = values_[key];
        for (auto v : split(part.substr(eq + 1), ',')) {
            if (v.empty()) {
                throw InputError("grid: empty value for '" + key + "'");
            }
            values.emplace_back(v);
        }
    }
}

auto Grid::strings(std::string const& key, std::vector<std::string> fallback) const -> std::vector<std::string>
{
    auto it = values_.find(key);
    return it == values_.end() ? fallback : it->second;
}

auto Grid::sizes(std::string const& key, std::vector<std::size_t> fallback) const -> std::vector<std::size_t>
{
    auto it = values_.find(key);
    if (it == values_.end()) {
        return fallback;
    }
    std::vector<std::size_t> out;
    for (auto const& v : it->second) {
        std::size_t x = 0;
        auto const [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
        if (ec != std::errc{} || ptr != v.data() + v.size()) {
            throw InputError("grid: '" + key + "' needs non-negative integers, got '" + v + "'");
        }
        out.push_back(x);
    }
    return out;
}

auto Grid::size(std::string const& key, std::size_t fallback) const -> std::size_t
{
    auto const v = sizes(key, {fallback});
    if (v.size() != 1) {
        throw InputError("grid: '" + key + "' takes a single value");
    }
    return v.front();
}

} // namespace maxlayers::cli
