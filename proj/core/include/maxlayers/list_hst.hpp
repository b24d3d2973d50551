#ifndef MAXLAYERS_LIST_HST_HPP
#define MAXLAYERS_LIST_HST_HPP

#include "maxlayers/half_space_tree.hpp"

#include <iosfwd>
#include <span>
#include <vector>

namespace maxlayers {

// Shuffles `points` uniformly, makes the first one the root and inserts the
// rest in that order. Points must be pairwise incomparable.
[[nodiscard]] auto bulk_build(std::span<Point const> points, std::size_t dimension, Rng& rng,
                              QueryMetrics* metrics = nullptr,
                              bool check_contracts = kContractChecksDefault) -> HalfSpaceTree;

// A layer stored as a list of half-space trees plus a pending buffer.
//
// Inserts accumulate in the buffer until it holds `capacity` points; the next
// insert turns buffer + point into a fresh tree via bulk_build. Randomizing
// the build order this way makes query cost independent of the order in
// which the layer's points arrive.
class ListHst {
public:
    ListHst(std::size_t dimension, std::size_t capacity, std::uint64_t seed,
            bool check_contracts = kContractChecksDefault);

    // max(1, ceil(sqrt(n))) for a dataset of n points.
    [[nodiscard]] static auto capacity_for(std::size_t n) noexcept -> std::size_t;

    void insert(Point const& p, QueryMetrics* metrics = nullptr);

    // Trees first (in build order, stopping at the first hit), then a linear
    // scan of the buffer.
    [[nodiscard]] auto above(Point const& p, QueryMetrics& metrics) const -> bool;
    [[nodiscard]] auto above(Point const& p) const -> bool;

    [[nodiscard]] auto dimension() const noexcept -> std::size_t { return dimension_; }
    [[nodiscard]] auto capacity() const noexcept -> std::size_t { return capacity_; }
    [[nodiscard]] auto size() const noexcept -> std::size_t { return size_; }
    [[nodiscard]] auto trees() const noexcept -> std::vector<HalfSpaceTree> const& { return trees_; }
    [[nodiscard]] auto buffer() const noexcept -> std::vector<Point> const& { return buffer_; }

    // Tree dumps prefixed with "tree <i>: "; buffered points as "buffer: ...".
    void dump(std::ostream& os) const;

private:
    std::size_t dimension_;
    std::size_t capacity_;
    std::size_t size_ = 0;
    std::vector<HalfSpaceTree> trees_;
    std::vector<Point> buffer_;
    Rng rng_;
    bool check_contracts_;
};

} // namespace maxlayers

#endif
