#ifndef MAXLAYERS_METRICS_HPP
#define MAXLAYERS_METRICS_HPP

#include <algorithm>
#include <cstdint>

namespace maxlayers {

// Work counters for layer queries and inserts. Counters only grow during an
// operation; coordinate_comparisons <= k * orthant_evaluations.
struct QueryMetrics {
    std::uint64_t nodes_visited = 0;
    std::uint64_t orthant_evaluations = 0;
    std::uint64_t coordinate_comparisons = 0;
    // Above-queries issued against layer containers (binary search steps).
    std::uint64_t above_calls = 0;
    // Largest number of child slots entered from one node by an above-query.
    std::uint64_t max_fanout = 0;

    auto operator+=(QueryMetrics const& o) noexcept -> QueryMetrics&
    {
        nodes_visited += o.nodes_visited;
        orthant_evaluations += o.orthant_evaluations;
        coordinate_comparisons += o.coordinate_comparisons;
        above_calls += o.above_calls;
        max_fanout = std::max(max_fanout, o.max_fanout);
        return *this;
    }

    friend auto operator==(QueryMetrics const&, QueryMetrics const&) -> bool = default;
};

} // namespace maxlayers

#endif
