#include "maxlayers/point.hpp"

#include "maxlayers/errors.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

namespace maxlayers {

namespace {
void require_same_dimension(Point const& p, Point const& q)
{
    if (p.dimension() != q.dimension()) {
        throw ContractError("dimension mismatch: " + std::to_string(p.dimension()) + " vs " + std::to_string(q.dimension()));
    }
}
} // namespace

PointSet::PointSet(std::size_t dimension)
    : dimension_(dimension)
{
}

PointSet::PointSet(std::initializer_list<std::initializer_list<double>> rows)
{
    for (auto const& row : rows) {
        std::vector<double> v(row);
        push_back(v);
    }
}

auto PointSet::from_rows(std::vector<std::vector<double>> const& rows) -> PointSet
{
    PointSet set;
    for (auto const& row : rows) {
        set.push_back(row);
    }
    return set;
}

void PointSet::push_back(std::span<double const> coords)
{
    if (coords.empty()) {
        throw ContractError("a point needs at least one coordinate");
    }
    if (dimension_ == 0) {
        dimension_ = coords.size();
    } else if (coords.size() != dimension_) {
        throw ContractError("dimension mismatch: expected " + std::to_string(dimension_) + ", got " + std::to_string(coords.size()));
    }
    for (double c : coords) {
        if (!std::isfinite(c)) {
            throw ContractError("non-finite coordinate");
        }
    }
    data_.insert(data_.end(), coords.begin(), coords.end());
    ++size_;
}

auto PointSet::points() const -> std::vector<Point>
{
    std::vector<Point> out;
    out.reserve(size_);
    for (std::size_t i = 0; i < size_; ++i) {
        out.push_back((*this)[i]);
    }
    return out;
}

OrthantLabel::OrthantLabel(std::size_t bits)
    : bits_(bits)
    , words_((bits + 63) / 64, 0)
{
}

auto OrthantLabel::count() const noexcept -> std::size_t
{
    std::size_t c = 0;
    for (auto w : words_) {
        c += static_cast<std::size_t>(std::popcount(w));
    }
    return c;
}

auto OrthantLabel::to_string() const -> std::string
{
    std::string s(bits_, '0');
    for (std::size_t j = 0; j < bits_; ++j) {
        if (test(j)) {
            s[j] = '1';
        }
    }
    return s;
}

auto same_coords(Point const& p, Point const& q) -> bool
{
    return std::ranges::equal(p.coords, q.coords);
}

auto dominates(Point const& p, Point const& q) -> bool
{
    require_same_dimension(p, q);
    bool strict = false;
    for (std::size_t j = 0; j < p.dimension(); ++j) {
        if (p[j] < q[j]) {
            return false;
        }
        strict = strict || p[j] > q[j];
    }
    return strict;
}

auto incomparable(Point const& p, Point const& q) -> bool
{
    return !dominates(p, q) && !dominates(q, p);
}

auto orthant(Point const& p, Point const& q) -> OrthantLabel
{
    require_same_dimension(p, q);
    OrthantLabel label(p.dimension());
    for (std::size_t j = 0; j < p.dimension(); ++j) {
        if (p[j] < q[j]) {
            label.set(j);
        }
    }
    return label;
}

auto mu(Point const& p) -> double
{
    return *std::ranges::max_element(p.coords);
}

auto linear_extension(std::span<Point const> points) -> std::vector<std::size_t>
{
    std::vector<double> key(points.size());
    std::ranges::transform(points, key.begin(), [](Point const& p) { return mu(p); });

    std::vector<std::size_t> order(points.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::ranges::sort(order, [&](std::size_t a, std::size_t b) {
        if (key[a] != key[b]) {
            return key[a] > key[b];
        }
        auto const& pa = points[a].coords;
        auto const& pb = points[b].coords;
        if (std::lexicographical_compare(pb.begin(), pb.end(), pa.begin(), pa.end())) {
            return true;
        }
        if (std::lexicographical_compare(pa.begin(), pa.end(), pb.begin(), pb.end())) {
            return false;
        }
        return points[a].index < points[b].index;
    });
    return order;
}

} // namespace maxlayers
