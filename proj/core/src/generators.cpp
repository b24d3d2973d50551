#include "maxlayers/generators.hpp"

#include "maxlayers/errors.hpp"
#include "maxlayers/io.hpp"

#include <algorithm>
#include <charconv>
#include <set>

namespace maxlayers {

namespace {
auto parse_count(std::string_view field, char const* what) -> std::size_t
{
    std::size_t value = 0;
    auto const [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size()) {
        throw InputError("generator spec: bad " + std::string(what) + " '" + std::string(field) + "'");
    }
    return value;
}

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

// Exact simplex points: integer gaps summing to 2^32, scaled by 2^-32, so
// every coordinate sum is exactly 1 and distinct points are incomparable.
auto lattice_simplex_point(Rng& rng, std::size_t k) -> std::vector<std::uint64_t>
{
    constexpr std::uint64_t total = std::uint64_t{1} << 32U;
    std::vector<std::uint64_t> cuts(k - 1);
    for (auto& c : cuts) {
        c = rng() >> 32U;
    }
    std::ranges::sort(cuts);
    std::vector<std::uint64_t> gaps(k);
    std::uint64_t prev = 0;
    for (std::size_t j = 0; j + 1 < k; ++j) {
        gaps[j] = cuts[j] - prev;
        prev = cuts[j];
    }
    gaps[k - 1] = total - prev;
    return gaps;
}

auto make_antichain(GeneratorSpec const& spec) -> PointSet
{
    PointSet out(spec.k);
    out.reserve(spec.n);
    auto const n = static_cast<double>(spec.n);
    if (spec.k == 1) {
        if (spec.n == 1) {
            out.push_back(std::vector<double>{1.0});
        }
        return out;
    }
    if (spec.k == 2) {
        for (std::size_t i = 1; i <= spec.n; ++i) {
            double const x = static_cast<double>(i) / n;
            out.push_back(std::vector<double>{x, 1.0 - x});
        }
        return out;
    }
    out = antichain_on_simplex(spec.n, spec.k, spec.seed);
    if (!is_antichain(out)) {
        throw ContractError("antichain generator produced a comparable pair");
    }
    return out;
}
} // namespace

auto antichain_on_simplex(std::size_t n, std::size_t k, std::uint64_t seed) -> PointSet
{
    if (k < 2 && n > 1) {
        throw InputError("antichain needs k >= 2 for more than one point");
    }
    PointSet out(k);
    out.reserve(n);
    Rng rng(seed);
    std::set<std::vector<std::uint64_t>> seen;
    std::vector<double> row(k);
    while (out.size() < n) {
        auto gaps = lattice_simplex_point(rng, k);
        if (!seen.insert(gaps).second) {
            continue;
        }
        std::ranges::transform(gaps, row.begin(), [](std::uint64_t g) { return static_cast<double>(g) * 0x1.0p-32; });
        out.push_back(row);
    }
    return out;
}

auto to_string(GeneratorKind kind) -> std::string_view
{
    switch (kind) {
    case GeneratorKind::RandomOrder:
        return "random";
    case GeneratorKind::Chain:
        return "chain";
    case GeneratorKind::Antichain:
        return "antichain";
    case GeneratorKind::Duplicates:
        return "duplicates";
    case GeneratorKind::Grid:
        return "grid";
    case GeneratorKind::File:
        return "file";
    }
    return "?";
}

auto parse_generator_kind(std::string_view text) -> std::optional<GeneratorKind>
{
    for (auto kind : {GeneratorKind::RandomOrder, GeneratorKind::Chain, GeneratorKind::Antichain,
                      GeneratorKind::Duplicates, GeneratorKind::Grid, GeneratorKind::File}) {
        if (text == to_string(kind)) {
            return kind;
        }
    }
    if (text == "random-order") {
        return GeneratorKind::RandomOrder;
    }
    return std::nullopt;
}

auto parse_generator_spec(std::string_view text, std::uint64_t seed) -> GeneratorSpec
{
    auto const fields = split(text, ',');
    auto const kind = parse_generator_kind(fields[0]);
    if (!kind) {
        throw InputError("generator spec: unknown kind '" + std::string(fields[0]) + "'");
    }
    GeneratorSpec spec;
    spec.kind = *kind;
    spec.seed = seed;
    if (spec.kind == GeneratorKind::File) {
        if (fields.size() < 2 || fields[1].empty()) {
            throw InputError("generator spec: file needs a path");
        }
        // Paths may contain commas.
        spec.path = std::string(text.substr(fields[0].size() + 1));
        return spec;
    }
    if (fields.size() < 3) {
        throw InputError("generator spec: expected KIND,n,k[,params]");
    }
    spec.n = parse_count(fields[1], "n");
    spec.k = parse_count(fields[2], "k");
    if (spec.k == 0) {
        throw InputError("generator spec: k must be >= 1");
    }
    for (std::size_t i = 3; i < fields.size(); ++i) {
        auto const eq = fields[i].find('=');
        if (eq == std::string_view::npos) {
            throw InputError("generator spec: expected key=value, got '" + std::string(fields[i]) + "'");
        }
        auto const key = fields[i].substr(0, eq);
        auto const value = fields[i].substr(eq + 1);
        if (key == "mult") {
            spec.multiplicity = parse_count(value, "mult");
        } else if (key == "side") {
            spec.side = parse_count(value, "side");
        } else {
            throw InputError("generator spec: unknown parameter '" + std::string(key) + "'");
        }
    }
    return spec;
}

auto to_string(GeneratorSpec const& spec) -> std::string
{
    std::string s(to_string(spec.kind));
    if (spec.kind == GeneratorKind::File) {
        return s + "," + spec.path;
    }
    s += "," + std::to_string(spec.n) + "," + std::to_string(spec.k);
    if (spec.kind == GeneratorKind::Duplicates) {
        s += ",mult=" + std::to_string(spec.multiplicity);
    } else if (spec.kind == GeneratorKind::Grid) {
        s += ",side=" + std::to_string(spec.side);
    }
    return s;
}

auto generate(GeneratorSpec const& spec) -> PointSet
{
    if (spec.kind == GeneratorKind::File) {
        return read_points_file(spec.path);
    }
    if (spec.k == 0) {
        throw InputError("generator spec: k must be >= 1");
    }

    Rng rng(spec.seed);
    PointSet out(spec.k);
    out.reserve(spec.n);
    std::vector<double> row(spec.k);
    auto const n = static_cast<double>(spec.n);

    switch (spec.kind) {
    case GeneratorKind::RandomOrder:
        for (std::size_t i = 0; i < spec.n; ++i) {
            std::ranges::generate(row, [&] { return uniform01(rng); });
            out.push_back(row);
        }
        return out;

    case GeneratorKind::Chain:
        for (std::size_t i = 1; i <= spec.n; ++i) {
            std::ranges::fill(row, static_cast<double>(i) / n);
            out.push_back(row);
        }
        return out;

    case GeneratorKind::Antichain:
        if (spec.k == 1 && spec.n > 1) {
            throw InputError("generator spec: no antichain of more than one point exists for k = 1");
        }
        return make_antichain(spec);

    case GeneratorKind::Duplicates: {
        if (spec.multiplicity == 0) {
            throw InputError("generator spec: mult must be >= 1");
        }
        auto const base = (spec.n + spec.multiplicity - 1) / spec.multiplicity;
        std::vector<std::vector<double>> rows;
        for (std::size_t b = 0; b < base; ++b) {
            std::ranges::generate(row, [&] { return uniform01(rng); });
            for (std::size_t m = 0; m < spec.multiplicity && rows.size() < spec.n; ++m) {
                rows.push_back(row);
            }
        }
        shuffle(std::span(rows), rng);
        for (auto const& r : rows) {
            out.push_back(r);
        }
        return out;
    }

    case GeneratorKind::Grid: {
        if (spec.side < 2) {
            throw InputError("generator spec: side must be >= 2");
        }
        auto const step = static_cast<double>(spec.side - 1);
        for (std::size_t i = 0; i < spec.n; ++i) {
            std::ranges::generate(row, [&] { return static_cast<double>(uniform_index(rng, spec.side)) / step; });
            out.push_back(row);
        }
        return out;
    }

    case GeneratorKind::File:
        break;
    }
    return out;
}

auto lattice(std::size_t side, std::size_t k) -> PointSet
{
    if (side < 2 || k == 0) {
        throw ContractError("lattice needs side >= 2 and k >= 1");
    }
    PointSet out(k);
    std::vector<std::size_t> digits(k, 0);
    std::vector<double> row(k);
    auto const step = static_cast<double>(side - 1);
    for (;;) {
        std::ranges::transform(digits, row.begin(), [&](std::size_t d) { return static_cast<double>(d) / step; });
        out.push_back(row);
        std::size_t j = k;
        while (j > 0 && ++digits[j - 1] == side) {
            digits[j - 1] = 0;
            --j;
        }
        if (j == 0) {
            return out;
        }
    }
}

auto sample_simplex(Rng& rng, std::size_t k) -> std::vector<double>
{
    std::vector<double> cuts(k - 1);
    std::ranges::generate(cuts, [&] { return uniform01(rng); });
    std::ranges::sort(cuts);
    std::vector<double> x(k);
    double prev = 0.0;
    for (std::size_t j = 0; j + 1 < k; ++j) {
        x[j] = cuts[j] - prev;
        prev = cuts[j];
    }
    x[k - 1] = 1.0 - prev;
    return x;
}

auto is_antichain(PointSet const& points) -> bool
{
    auto const all = points.points();
    for (std::size_t i = 0; i < all.size(); ++i) {
        for (std::size_t j = i + 1; j < all.size(); ++j) {
            if (!incomparable(all[i], all[j])) {
                return false;
            }
        }
    }
    return true;
}

} // namespace maxlayers
