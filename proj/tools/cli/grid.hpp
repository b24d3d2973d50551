#ifndef MAXLAYERS_CLI_GRID_HPP
#define MAXLAYERS_CLI_GRID_HPP

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace maxlayers::cli {

// "key=v1,v2;key2=v3" grid strings for analyze and bench. Throws InputError
// on malformed text, unknown keys, or bad numbers.
class Grid {
public:
    Grid(std::string_view text, std::vector<std::string> allowed_keys);

    [[nodiscard]] auto has(std::string const& key) const -> bool { return values_.contains(key); }
    [[nodiscard]] auto strings(std::string const& key, std::vector<std::string> fallback) const
        -> std::vector<std::string>;
    [[nodiscard]] auto sizes(std::string const& key, std::vector<std::size_t> fallback) const
        -> std::vector<std::size_t>;
    [[nodiscard]] auto size(std::string const& key, std::size_t fallback) const -> std::size_t;

private:
    std::map<std::string, std::vector<std::string>> values_;
};

} // namespace maxlayers::cli

#endif
