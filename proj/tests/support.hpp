#ifndef MAXLAYERS_TESTS_SUPPORT_HPP
#define MAXLAYERS_TESTS_SUPPORT_HPP

#include "maxlayers/maxlayers.hpp"

#include <algorithm>
#include <span>
#include <vector>

namespace maxlayers::testing {

inline auto uniform_points(std::size_t n, std::size_t k, std::uint64_t seed) -> PointSet
{
    GeneratorSpec spec;
    spec.kind = GeneratorKind::RandomOrder;
    spec.n = n;
    spec.k = k;
    spec.seed = seed;
    return generate(spec);
}

inline auto scan_above(std::span<Point const> stored, Point const& p) -> bool
{
    return std::ranges::any_of(stored, [&](Point const& q) { return dominates(q, p); });
}

// Brute-force rank from the definition: 1 + max rank of the dominators.
inline auto ranks_by_definition(PointSet const& points) -> std::vector<std::size_t>
{
    auto const pts = points.points();
    auto const order = linear_extension(pts);
    std::vector<std::size_t> rank(pts.size(), 0);
    for (auto i : order) {
        std::size_t best = 0;
        for (std::size_t q = 0; q < pts.size(); ++q) {
            if (dominates(pts[q], pts[i])) {
                best = std::max(best, rank[q]);
            }
        }
        rank[i] = best + 1;
    }
    return rank;
}

} // namespace maxlayers::testing

#endif
