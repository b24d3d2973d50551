#ifndef MAXLAYERS_LAYER_ENGINE_HPP
#define MAXLAYERS_LAYER_ENGINE_HPP

#include "maxlayers/half_space_tree.hpp"
#include "maxlayers/list_hst.hpp"
#include "maxlayers/point.hpp"

#include <optional>
#include <string_view>
#include <variant>
#include <vector>

namespace maxlayers {

enum class Mode {
    Hst,     // one half-space tree per layer; fast on random-order inputs
    ListHst, // list of trees + buffer per layer; safe for arbitrary inputs
};

[[nodiscard]] auto to_string(Mode mode) -> std::string_view;
// Accepts "hst" and "list-hst".
[[nodiscard]] auto parse_mode(std::string_view text) -> std::optional<Mode>;

// Maximal-layer rank (1-based) of every input point, by input index.
struct LayerAssignment {
    std::vector<std::size_t> ranks;
    std::size_t height = 0;
    std::size_t width_observed = 0;

    friend auto operator==(LayerAssignment const&, LayerAssignment const&) -> bool = default;
};

// Fills height and width_observed from ranks.
[[nodiscard]] auto make_assignment(std::vector<std::size_t> ranks) -> LayerAssignment;

// Ordered layers, layer 0 on top. New layers are only ever appended at the
// bottom, so a plain vector replaces the balanced search tree: binary search
// over indices issues the same O(log h) above-queries.
class LayerStore {
public:
    // `list_capacity` is the List-HST buffer size; ignored in Hst mode.
    LayerStore(Mode mode, std::size_t dimension, std::size_t list_capacity, std::uint64_t seed,
               bool check_contracts = kContractChecksDefault);

    // Smallest 0-based layer index whose points do not dominate p, or nullopt
    // when every layer is above p and a new layer is needed. Requires every
    // point dominating p to be stored already.
    [[nodiscard]] auto search(Point const& p, QueryMetrics& metrics) const -> std::optional<std::size_t>;

    void insert(std::size_t layer, Point const& p, QueryMetrics* metrics = nullptr);
    // Opens a new bottom layer holding p; returns its index.
    auto append(Point const& p, QueryMetrics* metrics = nullptr) -> std::size_t;

    [[nodiscard]] auto mode() const noexcept -> Mode { return mode_; }
    [[nodiscard]] auto size() const noexcept -> std::size_t { return layers_.size(); }
    [[nodiscard]] auto layer_size(std::size_t layer) const -> std::size_t;
    [[nodiscard]] auto above(std::size_t layer, Point const& p, QueryMetrics& metrics) const -> bool;

private:
    using Layer = std::variant<HalfSpaceTree, ListHst>;

    Mode mode_;
    std::size_t dimension_;
    std::size_t list_capacity_;
    std::uint64_t seed_;
    bool check_contracts_;
    std::vector<Layer> layers_;
};

struct EngineOptions {
    bool check_contracts = kContractChecksDefault;
    // Buffer size for List-HST layers; 0 selects ceil(sqrt(n)).
    std::size_t list_capacity = 0;
};

struct PartitionResult {
    LayerAssignment assignment;
    QueryMetrics metrics;
    std::size_t distinct_points = 0;
    std::size_t list_capacity = 0;
};

// Maximal layers of `points`. Exact duplicates are collapsed before the run
// and share their representative's rank. The ranks never depend on mode or
// seed; only the metrics do.
[[nodiscard]] auto max_partition(PointSet const& points, Mode mode, std::uint64_t seed,
                                 EngineOptions const& options = {}) -> PartitionResult;

} // namespace maxlayers

#endif
