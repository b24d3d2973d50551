#ifndef MAXLAYERS_ORACLE_HPP
#define MAXLAYERS_ORACLE_HPP

#include "maxlayers/layer_engine.hpp"
#include "maxlayers/metrics.hpp"
#include "maxlayers/point.hpp"

namespace maxlayers {

// Brute-force ranks: rank(p) = 1 + max rank over its dominators, evaluated
// along a linear extension. Compares every pair exactly once, so
// orthant_evaluations ends at n(n-1)/2.
[[nodiscard]] auto oracle_layers(PointSet const& points, QueryMetrics* metrics = nullptr) -> LayerAssignment;

// Independent second oracle: repeatedly peels off the non-dominated points of
// what is left (block-nested-loop maxima per round). Used to validate the DP.
[[nodiscard]] auto oracle_layers_peeling(PointSet const& points) -> LayerAssignment;

} // namespace maxlayers

#endif
