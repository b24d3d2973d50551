#include "maxlayers/oracle.hpp"

#include <algorithm>

namespace maxlayers {

auto oracle_layers(PointSet const& points, QueryMetrics* metrics) -> LayerAssignment
{
    auto const all = points.points();
    auto const order = linear_extension(all);
    auto const k = points.dimension();

    std::vector<std::size_t> ranks(all.size(), 0);
    for (std::size_t i = 0; i < order.size(); ++i) {
        auto const& p = all[order[i]];
        std::size_t best = 0;
        for (std::size_t j = 0; j < i; ++j) {
            auto const& q = all[order[j]];
            if (metrics != nullptr) {
                ++metrics->orthant_evaluations;
                metrics->coordinate_comparisons += k;
            }
            if (dominates(q, p)) {
                best = std::max(best, ranks[order[j]]);
            }
        }
        ranks[order[i]] = best + 1;
    }
    return make_assignment(std::move(ranks));
}

auto oracle_layers_peeling(PointSet const& points) -> LayerAssignment
{
    auto const all = points.points();
    std::vector<std::size_t> remaining(all.size());
    for (std::size_t i = 0; i < all.size(); ++i) {
        remaining[i] = i;
    }

    std::vector<std::size_t> ranks(all.size(), 0);
    std::vector<std::size_t> maxima;
    std::vector<std::size_t> rest;
    for (std::size_t layer = 1; !remaining.empty(); ++layer) {
        maxima.clear();
        for (auto i : remaining) {
            bool const covered = std::ranges::any_of(maxima, [&](std::size_t m) { return dominates(all[m], all[i]); });
            if (covered) {
                continue;
            }
            std::erase_if(maxima, [&](std::size_t m) { return dominates(all[i], all[m]); });
            maxima.push_back(i);
        }
        for (auto m : maxima) {
            ranks[m] = layer;
        }
        rest.clear();
        for (auto i : remaining) {
            if (ranks[i] == 0) {
                rest.push_back(i);
            }
        }
        remaining.swap(rest);
    }
    return make_assignment(std::move(ranks));
}

} // namespace maxlayers
