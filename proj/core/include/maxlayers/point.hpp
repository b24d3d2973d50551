#ifndef MAXLAYERS_POINT_HPP
#define MAXLAYERS_POINT_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace maxlayers {

// A point is a view: coordinates live in the PointSet that produced it and
// must outlive every structure holding the point. `index` is the 0-based
// position in the original input.
struct Point {
    std::span<double const> coords;
    std::size_t index = 0;

    [[nodiscard]] auto dimension() const noexcept -> std::size_t { return coords.size(); }
    [[nodiscard]] auto operator[](std::size_t j) const noexcept -> double { return coords[j]; }
};

// Owning, row-major storage for n points of a common dimension k.
// Every coordinate is finite; push_back rejects NaN and infinities.
class PointSet {
public:
    PointSet() = default;
    explicit PointSet(std::size_t dimension);
    PointSet(std::initializer_list<std::initializer_list<double>> rows);

    static auto from_rows(std::vector<std::vector<double>> const& rows) -> PointSet;

    // Throws ContractError on dimension mismatch or a non-finite value.
    void push_back(std::span<double const> coords);
    void reserve(std::size_t n) { data_.reserve(n * dimension_); }

    [[nodiscard]] auto size() const noexcept -> std::size_t { return size_; }
    [[nodiscard]] auto empty() const noexcept -> bool { return size_ == 0; }
    // 0 only for an empty set whose dimension was never fixed.
    [[nodiscard]] auto dimension() const noexcept -> std::size_t { return dimension_; }

    [[nodiscard]] auto coords(std::size_t i) const noexcept -> std::span<double const>
    {
        return {data_.data() + i * dimension_, dimension_};
    }
    [[nodiscard]] auto operator[](std::size_t i) const noexcept -> Point { return {coords(i), i}; }
    [[nodiscard]] auto points() const -> std::vector<Point>;
    [[nodiscard]] auto data() const noexcept -> std::span<double const> { return data_; }

private:
    std::size_t dimension_ = 0;
    std::size_t size_ = 0;
    std::vector<double> data_;
};

// k-bit label of the orthant of q relative to origin p:
// bit j is set iff p[j] < q[j].
class OrthantLabel {
public:
    OrthantLabel() = default;
    explicit OrthantLabel(std::size_t bits);

    [[nodiscard]] auto size() const noexcept -> std::size_t { return bits_; }
    [[nodiscard]] auto test(std::size_t j) const noexcept -> bool
    {
        return ((words_[j / 64] >> (j % 64)) & 1U) != 0;
    }
    void set(std::size_t j) noexcept { words_[j / 64] |= std::uint64_t{1} << (j % 64); }

    [[nodiscard]] auto count() const noexcept -> std::size_t;
    [[nodiscard]] auto is_zero() const noexcept -> bool { return count() == 0; }
    [[nodiscard]] auto is_all_ones() const noexcept -> bool { return count() == bits_; }
    // Bit 1 first, e.g. "100".
    [[nodiscard]] auto to_string() const -> std::string;

    friend auto operator==(OrthantLabel const&, OrthantLabel const&) -> bool = default;

private:
    std::size_t bits_ = 0;
    std::vector<std::uint64_t> words_;
};

struct DatasetMeta {
    std::size_t n = 0;
    std::size_t k = 0;
    std::string source;
};

[[nodiscard]] auto same_coords(Point const& p, Point const& q) -> bool;

// p strictly dominates q: p[j] >= q[j] for every j and the vectors differ.
// Equal vectors are incomparable. Throws ContractError on dimension mismatch.
[[nodiscard]] auto dominates(Point const& p, Point const& q) -> bool;

[[nodiscard]] auto incomparable(Point const& p, Point const& q) -> bool;

[[nodiscard]] auto orthant(Point const& p, Point const& q) -> OrthantLabel;

// Largest coordinate.
[[nodiscard]] auto mu(Point const& p) -> double;

// Positions into `points` forming a linear extension of dominance:
// decreasing mu, then decreasing lexicographic order, then increasing
// Point::index for exact duplicates.
[[nodiscard]] auto linear_extension(std::span<Point const> points) -> std::vector<std::size_t>;

} // namespace maxlayers

#endif
