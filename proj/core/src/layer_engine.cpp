#include "maxlayers/layer_engine.hpp"

#include <algorithm>
#include <numeric>

namespace maxlayers {

auto to_string(Mode mode) -> std::string_view
{
    switch (mode) {
    case Mode::Hst:
        return "hst";
    case Mode::ListHst:
        return "list-hst";
    }
    return "?";
}

auto parse_mode(std::string_view text) -> std::optional<Mode>
{
    if (text == "hst") {
        return Mode::Hst;
    }
    if (text == "list-hst") {
        return Mode::ListHst;
    }
    return std::nullopt;
}

auto make_assignment(std::vector<std::size_t> ranks) -> LayerAssignment
{
    LayerAssignment out;
    out.height = ranks.empty() ? 0 : *std::ranges::max_element(ranks);
    std::vector<std::size_t> sizes(out.height + 1, 0);
    for (auto r : ranks) {
        ++sizes[r];
    }
    out.width_observed = sizes.empty() ? 0 : *std::ranges::max_element(sizes);
    out.ranks = std::move(ranks);
    return out;
}

LayerStore::LayerStore(Mode mode, std::size_t dimension, std::size_t list_capacity, std::uint64_t seed,
                       bool check_contracts)
    : mode_(mode)
    , dimension_(dimension)
    , list_capacity_(std::max<std::size_t>(list_capacity, 1))
    , seed_(seed)
    , check_contracts_(check_contracts)
{
}

auto LayerStore::layer_size(std::size_t layer) const -> std::size_t
{
    return std::visit([](auto const& l) { return l.size(); }, layers_.at(layer));
}

auto LayerStore::above(std::size_t layer, Point const& p, QueryMetrics& metrics) const -> bool
{
    ++metrics.above_calls;
    return std::visit([&](auto const& l) { return l.above(p, metrics); }, layers_[layer]);
}

auto LayerStore::search(Point const& p, QueryMetrics& metrics) const -> std::optional<std::size_t>
{
    // Layers above p form a prefix of the sequence.
    std::size_t lo = 0;
    std::size_t hi = layers_.size();
    while (lo < hi) {
        std::size_t const mid = lo + (hi - lo) / 2;
        if (above(mid, p, metrics)) {
            lo = mid + 1;
        } else {
            hi = mid;
        }
    }
    if (lo == layers_.size()) {
        return std::nullopt;
    }
    return lo;
}

void LayerStore::insert(std::size_t layer, Point const& p, QueryMetrics* metrics)
{
    std::visit([&](auto& l) { l.insert(p, metrics); }, layers_.at(layer));
}

auto LayerStore::append(Point const& p, QueryMetrics* metrics) -> std::size_t
{
    auto const layer_seed = derive_seed(seed_, layers_.size());
    if (mode_ == Mode::Hst) {
        layers_.emplace_back(std::in_place_type<HalfSpaceTree>, dimension_, layer_seed, check_contracts_);
    } else {
        layers_.emplace_back(std::in_place_type<ListHst>, dimension_, list_capacity_, layer_seed, check_contracts_);
    }
    insert(layers_.size() - 1, p, metrics);
    return layers_.size() - 1;
}

auto max_partition(PointSet const& points, Mode mode, std::uint64_t seed, EngineOptions const& options)
    -> PartitionResult
{
    PartitionResult result;
    auto const n = points.size();
    if (n == 0) {
        return result;
    }

    // Collapse exact duplicates onto the lowest input index.
    std::vector<std::size_t> by_coords(n);
    std::iota(by_coords.begin(), by_coords.end(), std::size_t{0});
    std::ranges::sort(by_coords, [&](std::size_t a, std::size_t b) {
        auto const ca = points.coords(a);
        auto const cb = points.coords(b);
        if (std::ranges::lexicographical_compare(ca, cb)) {
            return true;
        }
        if (std::ranges::lexicographical_compare(cb, ca)) {
            return false;
        }
        return a < b;
    });
    std::vector<std::size_t> representative(n);
    std::vector<Point> distinct;
    for (std::size_t i = 0; i < n; ++i) {
        auto const idx = by_coords[i];
        if (i > 0 && std::ranges::equal(points.coords(idx), points.coords(by_coords[i - 1]))) {
            representative[idx] = representative[by_coords[i - 1]];
        } else {
            representative[idx] = distinct.size();
            distinct.push_back(points[idx]);
        }
    }

    result.distinct_points = distinct.size();
    result.list_capacity = options.list_capacity != 0 ? options.list_capacity : ListHst::capacity_for(n);

    LayerStore store(mode, points.dimension(), result.list_capacity, seed, options.check_contracts);
    std::vector<std::size_t> rank_of_distinct(distinct.size(), 0);
    for (auto pos : linear_extension(distinct)) {
        auto const& p = distinct[pos];
        if (auto layer = store.search(p, result.metrics)) {
            store.insert(*layer, p, &result.metrics);
            rank_of_distinct[pos] = *layer + 1;
        } else {
            rank_of_distinct[pos] = store.append(p, &result.metrics) + 1;
        }
    }

    std::vector<std::size_t> ranks(n);
    for (std::size_t i = 0; i < n; ++i) {
        ranks[i] = rank_of_distinct[representative[i]];
    }
    result.assignment = make_assignment(std::move(ranks));
    return result;
}

} // namespace maxlayers
