#include "maxlayers/list_hst.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <string>

namespace maxlayers {

auto bulk_build(std::span<Point const> points, std::size_t dimension, Rng& rng, QueryMetrics* metrics,
                bool check_contracts) -> HalfSpaceTree
{
    std::vector<Point> order(points.begin(), points.end());
    shuffle(std::span<Point>(order), rng);
    HalfSpaceTree tree(dimension, rng(), check_contracts);
    for (auto const& p : order) {
        tree.insert(p, metrics);
    }
    return tree;
}

ListHst::ListHst(std::size_t dimension, std::size_t capacity, std::uint64_t seed, bool check_contracts)
    : dimension_(dimension)
    , capacity_(std::max<std::size_t>(capacity, 1))
    , rng_(seed)
    , check_contracts_(check_contracts)
{
    if (dimension == 0) {
        throw ContractError("list-hst needs dimension >= 1");
    }
}

auto ListHst::capacity_for(std::size_t n) noexcept -> std::size_t
{
    if (n <= 1) {
        return 1;
    }
    auto r = static_cast<std::size_t>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) {
        --r;
    }
    while (r * r < n) {
        ++r;
    }
    return r;
}

void ListHst::insert(Point const& p, QueryMetrics* metrics)
{
    if (p.dimension() != dimension_) {
        throw ContractError("dimension mismatch in insert");
    }
    if (check_contracts_) {
        auto check = [&](Point const& q) {
            if (dominates(q, p) || dominates(p, q)) {
                throw ContractError("insert of comparable pair: #" + std::to_string(q.index) + " and #" + std::to_string(p.index));
            }
        };
        std::ranges::for_each(buffer_, check);
        for (auto const& t : trees_) {
            for (std::size_t i = 0; i < t.size(); ++i) {
                check(t.point(static_cast<HalfSpaceTree::NodeId>(i)));
            }
        }
    }

    ++size_;
    if (buffer_.size() < capacity_) {
        buffer_.push_back(p);
        return;
    }
    buffer_.push_back(p);
    // The buffer was checked on the way in; skip the quadratic re-check.
    trees_.push_back(bulk_build(buffer_, dimension_, rng_, metrics, false));
    buffer_.clear();
}

auto ListHst::above(Point const& p) const -> bool
{
    QueryMetrics unused;
    return above(p, unused);
}

auto ListHst::above(Point const& p, QueryMetrics& metrics) const -> bool
{
    if (p.dimension() != dimension_) {
        throw ContractError("dimension mismatch in above-query");
    }
    for (auto const& t : trees_) {
        if (t.above(p, metrics)) {
            return true;
        }
    }
    for (auto const& q : buffer_) {
        ++metrics.orthant_evaluations;
        metrics.coordinate_comparisons += dimension_;
        if (dominates(q, p)) {
            return true;
        }
    }
    return false;
}

void ListHst::dump(std::ostream& os) const
{
    for (std::size_t i = 0; i < trees_.size(); ++i) {
        trees_[i].dump(os, "tree " + std::to_string(i) + ": ");
    }
    auto const precision = os.precision(17);
    for (auto const& q : buffer_) {
        os << "buffer:";
        for (double c : q.coords) {
            os << ' ' << c;
        }
        os << '\n';
    }
    os.precision(precision);
}

} // namespace maxlayers
