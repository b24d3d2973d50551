#ifndef MAXLAYERS_ANALYSIS_HPP
#define MAXLAYERS_ANALYSIS_HPP

#include "maxlayers/stats.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace maxlayers {

// Expected node count per depth of a half-space tree after w random
// insertions, under the model where an insert walks a uniformly random slot
// path until it meets an empty slot.
struct DepthProfile {
    std::size_t k = 1;
    std::size_t w = 0;
    std::vector<double> values; // a(w, d) for d = 0 .. w-1

    [[nodiscard]] auto mass() const -> double;
    // Smallest depth attaining the maximum; 0 for w = 0.
    [[nodiscard]] auto argmax() const -> std::size_t;
    [[nodiscard]] auto is_unimodal() const -> bool;
};

// Evaluates
//   a(w, d) = a(w-1, d-1) / k^(d-1) + (1 - 1/k^d) a(w-1, d),
//   a(w, 0) = 1 for w >= 1, a(w, d) = 0 for w <= d,
// one w at a time. Depths whose value underflowed to zero are not revisited,
// which keeps a scan to w = 2^14 cheap.
class DepthProfileRecurrence {
public:
    explicit DepthProfileRecurrence(std::size_t k);

    void step();
    [[nodiscard]] auto w() const noexcept -> std::size_t { return w_; }
    [[nodiscard]] auto profile() const -> DepthProfile;
    [[nodiscard]] auto value(std::size_t d) const -> double { return d < values_.size() ? values_[d] : 0.0; }
    [[nodiscard]] auto mass() const -> double;
    [[nodiscard]] auto argmax() const -> std::size_t;

private:
    std::size_t k_;
    std::size_t w_ = 0;
    std::vector<double> inv_pow_; // k^-d
    std::vector<double> values_;  // only the non-zero prefix is stored
};

[[nodiscard]] auto depth_profile(std::size_t w, std::size_t k) -> DepthProfile;

// Partial-fraction closed form of a(w, d). Alternating terms cancel badly
// for large d; use only to cross-check the recurrence.
[[nodiscard]] auto depth_profile_closed_form(std::size_t w, std::size_t k, std::size_t d) -> double;

// Per-coordinate ordering probabilities for mu-ordered random pairs:
// eta1 over all pairs, eta2 over incomparable pairs (k >= 2).
[[nodiscard]] auto eta1(std::size_t k) -> double;
[[nodiscard]] auto eta2(std::size_t k) -> double;

struct EtaEstimate {
    Estimate eta1;      // Pr[p[0] > q[0]], pairs ordered by the linear extension
    Estimate eta2;      // same, incomparable pairs only
    Estimate unordered; // Pr[first[0] > second[0]] for pairs as drawn (1/2)
};

// `trials` uniform pairs in [0,1]^k.
[[nodiscard]] auto estimate_eta(std::size_t k, std::size_t trials, std::uint64_t seed) -> EtaEstimate;

// Exponent of w in the expected unsuccessful-search bound:
// 1 - 1/log2(k) + log_k(1 + 2/(k+1)).
[[nodiscard]] auto u_bound_exponent(std::size_t k) -> double;
// log_k(w) + 2, upper bound on the depth maximizing a(w, .).
[[nodiscard]] auto d0_bound(double w, std::size_t k) -> double;

// sum_d eta1(k)^d a(w, d).
[[nodiscard]] auto unsuccessful_search_series(std::size_t w, std::size_t k) -> double;

struct TailSums {
    double exact = 0.0;
    double bound = 0.0;
};

// exact = sum_i b_i m^i; bound = sum_{i<=r} b_i m^i + b_{r+1} m^(r+1) / (1-m).
// Requires 0 <= m < 1 and b non-increasing from index r on (ContractError
// otherwise). A missing b_{r+1} counts as 0.
[[nodiscard]] auto lemma4_tail(std::span<double const> b, double m, std::size_t r) -> TailSums;
// The same head with the tail replaced by (7/3) b_{r+1} m^r for m = eta1(k);
// dominates the exact sum for k >= 4 and b_{r+1} >= 0.
[[nodiscard]] auto corollary2_bound(std::span<double const> b, std::size_t k, std::size_t r) -> double;

// Mean node count per depth over `trials` half-space trees, each built by
// inserting a fresh w-point antichain (see GeneratorKind::Antichain) in
// uniformly random order. Entry d covers depth d for d < w.
[[nodiscard]] auto measure_depth_histogram(std::size_t k, std::size_t w, std::size_t trials, std::uint64_t seed)
    -> std::vector<Estimate>;

struct UnsuccessfulSearch {
    std::size_t k = 0;
    std::size_t w = 0;
    Estimate visits;     // nodes visited per above-query that found nothing
    double series = 0.0; // unsuccessful_search_series(w, k)
};

// For each of `seeds` trees (a random-order build of a w-point antichain),
// runs `probes` above-queries with probes drawn uniformly from the same
// simplex and rejected while dominated by the layer.
[[nodiscard]] auto measure_unsuccessful_search(std::size_t k, std::size_t w, std::size_t probes, std::size_t seeds,
                                               std::uint64_t seed) -> UnsuccessfulSearch;

} // namespace maxlayers

#endif
