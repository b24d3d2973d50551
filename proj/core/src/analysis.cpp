#include "maxlayers/analysis.hpp"

#include "maxlayers/errors.hpp"
#include "maxlayers/generators.hpp"
#include "maxlayers/list_hst.hpp"
#include "maxlayers/random.hpp"
#include "parallel.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

namespace maxlayers {

auto loglog_slope(std::span<double const> x, std::span<double const> y) -> double
{
    if (x.size() != y.size() || x.size() < 2) {
        throw ContractError("loglog_slope needs two equally long series of length >= 2");
    }
    auto const n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        double const lx = std::log(x[i]);
        double const ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

// --- depth profile ----------------------------------------------------------

auto DepthProfile::mass() const -> double
{
    return std::accumulate(values.begin(), values.end(), 0.0);
}

auto DepthProfile::argmax() const -> std::size_t
{
    if (values.empty()) {
        return 0;
    }
    return static_cast<std::size_t>(std::ranges::max_element(values) - values.begin());
}

auto DepthProfile::is_unimodal() const -> bool
{
    std::size_t d = 1;
    while (d < values.size() && values[d] >= values[d - 1]) {
        ++d;
    }
    while (d < values.size() && values[d] <= values[d - 1]) {
        ++d;
    }
    return d >= values.size();
}

DepthProfileRecurrence::DepthProfileRecurrence(std::size_t k)
    : k_(k)
{
    if (k == 0) {
        throw ContractError("depth profile needs k >= 1");
    }
}

void DepthProfileRecurrence::step()
{
    ++w_;
    if (values_.empty()) {
        values_.push_back(1.0);
        inv_pow_.push_back(1.0);
        return;
    }
    // New deepest level d = values_.size() gets a(w-1, d-1) / k^(d-1).
    auto const inv_k = 1.0 / static_cast<double>(k_);
    auto const top = values_.size();
    double const spill = values_[top - 1] * inv_pow_[top - 1];
    if (spill != 0.0) {
        inv_pow_.push_back(inv_pow_.back() * inv_k);
        values_.push_back(spill);
    }
    for (std::size_t d = top - 1; d >= 1; --d) {
        values_[d] = values_[d - 1] * inv_pow_[d - 1] + (1.0 - inv_pow_[d]) * values_[d];
    }
    // a(w, 0) stays 1.
}

auto DepthProfileRecurrence::profile() const -> DepthProfile
{
    DepthProfile p{k_, w_, std::vector<double>(w_, 0.0)};
    std::copy(values_.begin(), values_.end(), p.values.begin());
    return p;
}

auto DepthProfileRecurrence::mass() const -> double
{
    return std::accumulate(values_.begin(), values_.end(), 0.0);
}

auto DepthProfileRecurrence::argmax() const -> std::size_t
{
    if (values_.empty()) {
        return 0;
    }
    return static_cast<std::size_t>(std::ranges::max_element(values_) - values_.begin());
}

auto depth_profile(std::size_t w, std::size_t k) -> DepthProfile
{
    DepthProfileRecurrence rec(k);
    for (std::size_t t = 0; t < w; ++t) {
        rec.step();
    }
    return rec.profile();
}

auto depth_profile_closed_form(std::size_t w, std::size_t k, std::size_t d) -> double
{
    if (w == 0) {
        return 0.0;
    }
    using real = long double;
    auto const kk = static_cast<real>(k);
    real sum = 0;
    for (std::size_t i = 1; i <= d; ++i) {
        real num = std::pow(1 - std::pow(kk, -static_cast<real>(i)), static_cast<real>(w - 1));
        real den = 1;
        for (std::size_t j = 1; j <= d; ++j) {
            if (j != i) {
                den *= 1 - std::pow(kk, static_cast<real>(j) - static_cast<real>(i));
            }
        }
        sum += num / den;
    }
    return static_cast<double>(std::pow(kk, static_cast<real>(d)) * (1 - sum));
}

// --- ordering probabilities ---------------------------------------------------

auto eta1(std::size_t k) -> double
{
    auto const kk = static_cast<double>(k);
    return 1.0 - 0.5 * (kk - 1.0) / (kk + 1.0);
}

auto eta2(std::size_t k) -> double
{
    auto const kk = static_cast<double>(k);
    return 1.0 - 1.0 / kk - 0.5 * (kk - 2.0) / (kk + 2.0);
}

auto estimate_eta(std::size_t k, std::size_t trials, std::uint64_t seed) -> EtaEstimate
{
    if (k == 0 || trials == 0) {
        throw ContractError("estimate_eta needs k >= 1 and trials >= 1");
    }
    Rng rng(seed);
    std::vector<double> a(k);
    std::vector<double> b(k);
    RunningStats all;
    RunningStats incomparable_only;
    RunningStats unordered;
    for (std::size_t t = 0; t < trials; ++t) {
        std::ranges::generate(a, [&] { return uniform01(rng); });
        std::ranges::generate(b, [&] { return uniform01(rng); });
        std::array<Point, 2> const pair{Point{a, 0}, Point{b, 1}};
        unordered.add(a[0] > b[0] ? 1.0 : 0.0);

        auto const order = linear_extension(pair);
        auto const& p = pair[order[0]];
        auto const& q = pair[order[1]];
        double const hit = p[0] > q[0] ? 1.0 : 0.0;
        all.add(hit);
        if (maxlayers::incomparable(p, q)) {
            incomparable_only.add(hit);
        }
    }
    return {all.estimate(), incomparable_only.estimate(), unordered.estimate()};
}

// --- bounds -------------------------------------------------------------------

auto u_bound_exponent(std::size_t k) -> double
{
    auto const kk = static_cast<double>(k);
    return 1.0 - 1.0 / std::log2(kk) + std::log(1.0 + 2.0 / (kk + 1.0)) / std::log(kk);
}

auto d0_bound(double w, std::size_t k) -> double
{
    return std::log(w) / std::log(static_cast<double>(k)) + 2.0;
}

auto unsuccessful_search_series(std::size_t w, std::size_t k) -> double
{
    auto const profile = depth_profile(w, k);
    double const m = eta1(k);
    double sum = 0.0;
    double power = 1.0;
    for (double a : profile.values) {
        sum += power * a;
        power *= m;
    }
    return sum;
}

auto lemma4_tail(std::span<double const> b, double m, std::size_t r) -> TailSums
{
    if (!(m >= 0.0 && m < 1.0)) {
        throw ContractError("lemma4_tail needs 0 <= m < 1");
    }
    for (std::size_t i = r + 1; i < b.size(); ++i) {
        if (b[i] > b[i - 1]) {
            throw ContractError("lemma4_tail: b is not non-increasing from index " + std::to_string(r)
                                + " (b[" + std::to_string(i) + "] > b[" + std::to_string(i - 1) + "])");
        }
    }
    TailSums out;
    double power = 1.0;
    for (std::size_t i = 0; i < b.size(); ++i) {
        out.exact += b[i] * power;
        if (i <= r) {
            out.bound += b[i] * power;
        }
        power *= m;
    }
    double const next = r + 1 < b.size() ? b[r + 1] : 0.0;
    out.bound += next * std::pow(m, static_cast<double>(r + 1)) / (1.0 - m);
    return out;
}

auto corollary2_bound(std::span<double const> b, std::size_t k, std::size_t r) -> double
{
    double const m = eta1(k);
    double head = 0.0;
    double power = 1.0;
    for (std::size_t i = 0; i <= r && i < b.size(); ++i) {
        head += b[i] * power;
        power *= m;
    }
    double const next = r + 1 < b.size() ? b[r + 1] : 0.0;
    return head + 7.0 / 3.0 * next * std::pow(m, static_cast<double>(r));
}

// --- Monte Carlo over tree builds ----------------------------------------------

namespace {
auto random_layer(std::size_t k, std::size_t w, std::uint64_t seed) -> PointSet
{
    return antichain_on_simplex(w, k, derive_seed(seed, "layer"));
}
} // namespace

auto measure_depth_histogram(std::size_t k, std::size_t w, std::size_t trials, std::uint64_t seed)
    -> std::vector<Estimate>
{
    std::vector<std::vector<std::size_t>> histograms(trials);
    detail::parallel_for(trials, [&](std::size_t t) {
        auto const trial_seed = derive_seed(seed, t);
        auto const layer = random_layer(k, w, trial_seed);
        auto const points = layer.points();
        Rng rng(derive_seed(trial_seed, "build"));
        histograms[t] = bulk_build(points, k, rng, nullptr, false).depth_histogram();
    });

    std::vector<RunningStats> per_depth(w);
    for (auto const& h : histograms) {
        for (std::size_t d = 0; d < w; ++d) {
            per_depth[d].add(d < h.size() ? static_cast<double>(h[d]) : 0.0);
        }
    }
    std::vector<Estimate> out;
    out.reserve(w);
    for (auto const& s : per_depth) {
        out.push_back(s.estimate());
    }
    return out;
}

auto measure_unsuccessful_search(std::size_t k, std::size_t w, std::size_t probes, std::size_t seeds,
                                 std::uint64_t seed) -> UnsuccessfulSearch
{
    if (w == 0 || probes == 0 || seeds == 0) {
        throw ContractError("measure_unsuccessful_search needs w, probes, seeds >= 1");
    }
    std::vector<std::vector<double>> visits(seeds);
    detail::parallel_for(seeds, [&](std::size_t s) {
        auto const trial_seed = derive_seed(seed, s);
        auto const layer = random_layer(k, w, trial_seed);
        auto const points = layer.points();
        Rng rng(derive_seed(trial_seed, "build"));
        auto const tree = bulk_build(points, k, rng, nullptr, false);

        Rng probe_rng(derive_seed(trial_seed, "probes"));
        visits[s].reserve(probes);
        while (visits[s].size() < probes) {
            auto const coords = sample_simplex(probe_rng, k);
            Point const probe{coords, 0};
            if (std::ranges::any_of(points, [&](Point const& q) { return dominates(q, probe); })) {
                continue;
            }
            QueryMetrics m;
            if (tree.above(probe, m)) {
                throw ContractError("above-query found a dominator the linear scan missed");
            }
            visits[s].push_back(static_cast<double>(m.nodes_visited));
        }
    });

    RunningStats stats;
    for (auto const& v : visits) {
        for (double x : v) {
            stats.add(x);
        }
    }
    return {k, w, stats.estimate(), unsuccessful_search_series(w, k)};
}

} // namespace maxlayers
