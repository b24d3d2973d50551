#ifndef MAXLAYERS_HALF_SPACE_TREE_HPP
#define MAXLAYERS_HALF_SPACE_TREE_HPP

#include "maxlayers/errors.hpp"
#include "maxlayers/metrics.hpp"
#include "maxlayers/point.hpp"
#include "maxlayers/random.hpp"

#include <cstdint>
#include <iosfwd>
#include <string_view>
#include <limits>
#include <vector>

namespace maxlayers {

// k-ary tree over the points of one layer (all pairwise incomparable).
//
// Child slot j of a node r only holds points q with q[j] <= r[j], i.e. q
// lies in r's j-th closed lower half-space. A dominance query therefore only
// needs to descend into slots j where the probe is not strictly above r on
// axis j, and an insert may pick any such slot; it picks one uniformly at
// random from the tree's own seeded stream.
//
// Single writer. Concurrent const queries are safe between mutations.
class HalfSpaceTree {
public:
    using NodeId = std::uint32_t;
    static constexpr NodeId kNone = std::numeric_limits<NodeId>::max();

    HalfSpaceTree(std::size_t dimension, std::uint64_t seed, bool check_contracts = kContractChecksDefault);

    // True iff some stored point strictly dominates p. Children are explored
    // depth first in ascending slot order.
    [[nodiscard]] auto above(Point const& p, QueryMetrics& metrics) const -> bool;
    [[nodiscard]] auto above(Point const& p) const -> bool;

    // p must be incomparable to every stored point. With contract checks
    // enabled this is verified by a linear scan and a ContractError names the
    // comparable pair; the cheap local check at each visited node is always on.
    void insert(Point const& p, QueryMetrics* metrics = nullptr);

    [[nodiscard]] auto dimension() const noexcept -> std::size_t { return dimension_; }
    [[nodiscard]] auto size() const noexcept -> std::size_t { return points_.size(); }
    [[nodiscard]] auto empty() const noexcept -> bool { return points_.empty(); }

    [[nodiscard]] auto root() const noexcept -> NodeId { return empty() ? kNone : 0; }
    [[nodiscard]] auto point(NodeId node) const -> Point const& { return points_[node]; }
    [[nodiscard]] auto depth(NodeId node) const -> std::size_t { return depth_[node]; }
    [[nodiscard]] auto child(NodeId node, std::size_t slot) const -> NodeId
    {
        return children_[static_cast<std::size_t>(node) * dimension_ + slot];
    }

    // Depth of the deepest node; 0 for an empty tree or a lone root.
    [[nodiscard]] auto height() const noexcept -> std::size_t { return height_; }
    // Entry d counts the nodes at depth d.
    [[nodiscard]] auto depth_histogram() const -> std::vector<std::size_t>;

    // Walks every edge and verifies the half-space child condition.
    [[nodiscard]] auto satisfies_child_condition() const -> bool;

    // One node per line, "depth, slot-path, coordinates", preorder with
    // ascending slots. Slots are printed 1-based and joined by '.'; the root's
    // path is "-". `prefix` is prepended to every line.
    void dump(std::ostream& os, std::string_view prefix = {}) const;

    friend auto operator==(HalfSpaceTree const& a, HalfSpaceTree const& b) -> bool;

private:
    std::size_t dimension_;
    std::vector<Point> points_;
    std::vector<std::uint32_t> depth_;
    std::vector<NodeId> children_;
    std::size_t height_ = 0;
    Rng rng_;
    bool check_contracts_;
};

} // namespace maxlayers

#endif
