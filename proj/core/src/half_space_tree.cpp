#include "maxlayers/half_space_tree.hpp"

#include <algorithm>
#include <ostream>
#include <string>

namespace maxlayers {

namespace {
auto describe(Point const& p) -> std::string
{
    std::string s = "#" + std::to_string(p.index) + " (";
    for (std::size_t j = 0; j < p.dimension(); ++j) {
        if (j > 0) {
            s += ", ";
        }
        s += std::to_string(p[j]);
    }
    return s + ")";
}
} // namespace

HalfSpaceTree::HalfSpaceTree(std::size_t dimension, std::uint64_t seed, bool check_contracts)
    : dimension_(dimension)
    , rng_(seed)
    , check_contracts_(check_contracts)
{
    if (dimension == 0) {
        throw ContractError("half-space tree needs dimension >= 1");
    }
}

auto HalfSpaceTree::above(Point const& p) const -> bool
{
    QueryMetrics unused;
    return above(p, unused);
}

auto HalfSpaceTree::above(Point const& p, QueryMetrics& metrics) const -> bool
{
    if (p.dimension() != dimension_) {
        throw ContractError("dimension mismatch in above-query");
    }
    if (empty()) {
        return false;
    }

    thread_local std::vector<NodeId> stack;
    thread_local std::vector<NodeId> entered;
    stack.clear();
    stack.push_back(0);

    auto const k = dimension_;
    while (!stack.empty()) {
        NodeId const r = stack.back();
        stack.pop_back();
        ++metrics.nodes_visited;
        ++metrics.orthant_evaluations;
        metrics.coordinate_comparisons += k;

        auto const& rp = points_[r].coords;
        NodeId const* kids = children_.data() + static_cast<std::size_t>(r) * k;
        bool below_somewhere = false;
        entered.clear();
        for (std::size_t j = 0; j < k; ++j) {
            if (rp[j] < p[j]) {
                below_somewhere = true;
            } else if (kids[j] != kNone) {
                entered.push_back(kids[j]);
            }
        }
        // Orthant 0^k: r dominates p unless it is the same vector, in which
        // case nothing in this layer can dominate p and the search goes on.
        if (!below_somewhere && !std::ranges::equal(rp, p.coords)) {
            return true;
        }
        metrics.max_fanout = std::max<std::uint64_t>(metrics.max_fanout, entered.size());
        stack.insert(stack.end(), entered.rbegin(), entered.rend());
    }
    return false;
}

void HalfSpaceTree::insert(Point const& p, QueryMetrics* metrics)
{
    if (p.dimension() != dimension_) {
        throw ContractError("dimension mismatch in insert");
    }
    if (check_contracts_) {
        for (auto const& q : points_) {
            if (dominates(q, p) || dominates(p, q)) {
                throw ContractError("insert of comparable pair: " + describe(q) + " and " + describe(p));
            }
        }
    }

    auto const k = dimension_;
    auto const id = static_cast<NodeId>(points_.size());
    if (empty()) {
        points_.push_back(p);
        depth_.push_back(0);
        children_.resize(k, kNone);
        return;
    }

    thread_local std::vector<std::size_t> slots;
    NodeId r = 0;
    std::uint32_t d = 0;
    for (;;) {
        if (metrics != nullptr) {
            ++metrics->nodes_visited;
            ++metrics->orthant_evaluations;
            metrics->coordinate_comparisons += k;
        }
        auto const& rp = points_[r].coords;
        slots.clear();
        for (std::size_t j = 0; j < k; ++j) {
            if (rp[j] >= p[j]) {
                slots.push_back(j);
            }
        }
        if (slots.empty()) {
            throw ContractError("insert of comparable pair: " + describe(p) + " dominates " + describe(points_[r]));
        }
        if (slots.size() == k && !std::ranges::equal(rp, p.coords)) {
            throw ContractError("insert of comparable pair: " + describe(points_[r]) + " dominates " + describe(p));
        }
        std::size_t const j = slots[uniform_index(rng_, slots.size())];
        ++d;
        auto& slot = children_[static_cast<std::size_t>(r) * k + j];
        if (slot == kNone) {
            slot = id;
            break;
        }
        r = slot;
    }

    points_.push_back(p);
    depth_.push_back(d);
    children_.resize(children_.size() + k, kNone);
    height_ = std::max<std::size_t>(height_, d);
}

auto HalfSpaceTree::depth_histogram() const -> std::vector<std::size_t>
{
    std::vector<std::size_t> hist(empty() ? 0 : height_ + 1, 0);
    for (auto d : depth_) {
        ++hist[d];
    }
    return hist;
}

auto HalfSpaceTree::satisfies_child_condition() const -> bool
{
    auto const k = dimension_;
    for (std::size_t r = 0; r < points_.size(); ++r) {
        for (std::size_t j = 0; j < k; ++j) {
            NodeId c = children_[r * k + j];
            if (c == kNone) {
                continue;
            }
            if (points_[c][j] > points_[r][j] || depth_[c] != depth_[r] + 1) {
                return false;
            }
        }
    }
    return true;
}

void HalfSpaceTree::dump(std::ostream& os, std::string_view prefix) const
{
    if (empty()) {
        return;
    }
    struct Frame {
        NodeId node;
        std::string path;
    };
    std::vector<Frame> stack{{0, "-"}};
    auto const precision = os.precision(17);
    while (!stack.empty()) {
        Frame f = std::move(stack.back());
        stack.pop_back();
        os << prefix << depth_[f.node] << ", " << f.path << ",";
        for (double c : points_[f.node].coords) {
            os << ' ' << c;
        }
        os << '\n';
        for (std::size_t j = dimension_; j-- > 0;) {
            NodeId c = child(f.node, j);
            if (c != kNone) {
                auto slot = std::to_string(j + 1);
                stack.push_back({c, f.path == "-" ? slot : f.path + "." + slot});
            }
        }
    }
    os.precision(precision);
}

auto operator==(HalfSpaceTree const& a, HalfSpaceTree const& b) -> bool
{
    if (a.dimension_ != b.dimension_ || a.children_ != b.children_ || a.depth_ != b.depth_) {
        return false;
    }
    return std::ranges::equal(a.points_, b.points_, [](Point const& p, Point const& q) {
        return p.index == q.index && same_coords(p, q);
    });
}

} // namespace maxlayers
