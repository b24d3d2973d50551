// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include "maxlayers/maxlayers.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace maxlayers;

namespace {

constexpr std::uint64_t kSeed = 20240611;

struct Outcome {
    bool pass = false;
    std::string detail;
};

struct Criterion {
    int id;
    char const* name;
    double budget_s;
    std::function<Outcome()> body;
};

auto make(GeneratorKind kind, std::size_t n, std::size_t k, std::uint64_t seed) -> PointSet
{
    GeneratorSpec spec;
    spec.kind = kind;
    spec.n = n;
    spec.k = k;
    spec.seed = seed;
    spec.side = 3;
    return generate(spec);
}

auto median(std::vector<double> v) -> double
{
    std::ranges::sort(v);
    auto const n = v.size();
    return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

auto oracle_equivalence() -> Outcome
{
    constexpr std::size_t ks[] = {1, 2, 3, 4, 8, 16};
    constexpr int per_kind = 200;
    std::size_t instances = 0;
    for (auto kind : {GeneratorKind::RandomOrder, GeneratorKind::Chain, GeneratorKind::Antichain,
                      GeneratorKind::Duplicates, GeneratorKind::Grid}) {
        for (int i = 0; i < per_kind; ++i) {
            auto const seed = derive_seed(derive_seed(kSeed, static_cast<std::uint64_t>(kind)), static_cast<std::uint64_t>(i));
            std::size_t const k = ks[static_cast<std::size_t>(i) % std::size(ks)];
            std::size_t n = 1 + static_cast<std::size_t>(seed % 500);
            if (kind == GeneratorKind::Antichain && k == 1) {
                n = 1;
            }
            auto const points = make(kind, n, k, seed);
            auto const dp = oracle_layers(points);
            if (!(dp == oracle_layers_peeling(points))) {
                return {false, "oracles disagree on " + std::string(to_string(kind)) + " instance " + std::to_string(i)};
            }
            for (auto mode : {Mode::Hst, Mode::ListHst}) {
                if (!(max_partition(points, mode, seed).assignment == dp)) {
                    return {false, std::string(to_string(mode)) + " differs on " + std::string(to_string(kind))
                                       + " instance " + std::to_string(i)};
                }
            }
            ++instances;
        }
    }
    return {true, std::to_string(instances) + " instances, both modes and both oracles agree"};
}

auto eta_probabilities() -> Outcome
{
    bool ok = true;
    std::ostringstream d;
    for (std::size_t k : {2U, 4U, 8U, 16U}) {
        auto const e = estimate_eta(k, 100'000, derive_seed(kSeed, k));
        double const d1 = std::abs(e.eta1.mean - eta1(k));
        double const d2 = std::abs(e.eta2.mean - eta2(k));
        ok = ok && d1 <= 0.01 && d2 <= 0.01;
        char buf[160];
        std::snprintf(buf, sizeof buf, "k=%zu eta1 %.4f vs %.4f, eta2 %.4f vs %.4f; ", k, e.eta1.mean, eta1(k),
                      e.eta2.mean, eta2(k));
        d << buf;
    }
    return {ok, d.str()};
}

auto depth_profile_match() -> Outcome
{
    constexpr std::size_t k = 4;
    constexpr std::size_t w = 256;
    auto const theory = depth_profile(w, k);
    auto const hist = measure_depth_histogram(k, w, 1000, derive_seed(kSeed, "depth"));
    std::size_t misses = 0;
    double worst = 0.0;
    std::size_t worst_d = 0;
    for (std::size_t d = 0; d <= 10; ++d) {
        double const gap = std::abs(hist[d].mean - theory.values[d]);
        double const allowed = 3.0 * hist[d].standard_error + 1e-9;
        if (gap > allowed) {
            ++misses;
        }
        double const z = hist[d].standard_error > 0 ? gap / hist[d].standard_error : 0.0;
        if (z > worst) {
            worst = z;
            worst_d = d;
        }
    }

    bool mass_ok = true;
    double worst_mass = 0.0;
    for (std::size_t kk : {2U, 4U, 8U, 16U}) {
        DepthProfileRecurrence rec(kk);
        for (std::size_t ww = 1; ww <= (std::size_t{1} << 14U); ++ww) {
            rec.step();
            double const rel = std::abs(rec.mass() - static_cast<double>(ww)) / static_cast<double>(ww);
            worst_mass = std::max(worst_mass, rel);
            mass_ok = mass_ok && rel <= 1e-12;
        }
    }
    char buf[200];
    std::snprintf(buf, sizeof buf, "%zu of 11 depths outside 3 SE (worst depth %zu at %.1f SE); mass rel err %.2g", misses,
                  worst_d, worst, worst_mass);
    return {misses == 0 && mass_ok, buf};
}

auto sublinear_search() -> Outcome
{
    constexpr std::size_t k = 4;
    std::vector<double> ws;
    std::vector<double> means;
    bool within = true;
    double worst_ratio = 0.0;
    for (std::size_t w = 64; w <= 4096; w *= 2) {
        auto const u = measure_unsuccessful_search(k, w, 10, 200, derive_seed(kSeed, w));
        ws.push_back(static_cast<double>(w));
        means.push_back(u.visits.mean);
        double const ratio = u.visits.mean / u.series;
        worst_ratio = std::max(worst_ratio, ratio);
        within = within && ratio <= 1.5;
    }
    double const slope = loglog_slope(ws, means);
    double const limit = u_bound_exponent(k) + 0.1;
    char buf[160];
    std::snprintf(buf, sizeof buf, "slope %.4f (limit %.4f), max mean/series %.3f (limit 1.5)", slope, limit, worst_ratio);
    return {slope <= limit && within, buf};
}

auto d0_scan() -> Outcome
{
    std::size_t violations = 0;
    double tightest = 1e300;
    for (std::size_t k : {4U, 8U, 16U}) {
        DepthProfileRecurrence rec(k);
        for (std::size_t w = 1; w <= (std::size_t{1} << 14U); ++w) {
            rec.step();
            double const slack = d0_bound(static_cast<double>(w), k) - static_cast<double>(rec.argmax());
            tightest = std::min(tightest, slack);
            violations += slack < 0 ? 1 : 0;
        }
    }
    char buf[120];
    std::snprintf(buf, sizeof buf, "%zu violations, smallest slack %.4f", violations, tightest);
    return {violations == 0, buf};
}

auto worst_case_guard() -> Outcome
{
    constexpr double C = 1.0;
    double worst = 0.0;
    bool brute_exact = true;
    for (std::size_t k : {2U, 4U, 8U}) {
        for (std::size_t n = 256; n <= 4096; n *= 2) {
            auto const points = make(GeneratorKind::Antichain, n, k, derive_seed(kSeed, n * 31 + k));
            auto const r = max_partition(points, Mode::ListHst, derive_seed(kSeed, n));
            double const nn = static_cast<double>(n);
            worst = std::max(worst, static_cast<double>(r.metrics.coordinate_comparisons) / (static_cast<double>(k) * nn * nn));
            if (k == 4) {
                QueryMetrics m;
                (void)oracle_layers(points, &m);
                brute_exact = brute_exact && m.orthant_evaluations == n * (n - 1) / 2;
            }
        }
    }
    char buf[160];
    std::snprintf(buf, sizeof buf, "max comparisons/(k n^2) = %.4f (C = %.1f); brute pair count %s", worst, C,
                  brute_exact ? "exact" : "WRONG");
    return {worst <= C && brute_exact, buf};
}

auto arbitrary_input_bound() -> Outcome
{
    bool ok = true;
    std::ostringstream d;
    for (std::size_t k : {4U, 8U}) {
        double const kk = static_cast<double>(k);
        double const exponent = 1.5 + std::log(kk - 1.0) / std::log(kk) / 2.0;
        double prev = 0.0;
        d << "k=" << k << ":";
        for (std::size_t n = 256; n <= 4096; n *= 2) {
            std::vector<double> samples;
            for (std::uint64_t s = 0; s < 3; ++s) {
                auto const points = make(GeneratorKind::Antichain, n, k, derive_seed(kSeed, n * 7 + s));
                auto const r = max_partition(points, Mode::ListHst, derive_seed(kSeed, s));
                samples.push_back(static_cast<double>(r.metrics.coordinate_comparisons));
            }
            double const nn = static_cast<double>(n);
            double const norm = median(samples) / (kk * kk * std::pow(nn, exponent) * std::log2(nn));
            if (prev > 0.0 && norm > 1.15 * prev) {
                ok = false;
            }
            char buf[32];
            std::snprintf(buf, sizeof buf, " %.4g", norm);
            d << buf;
            prev = norm;
        }
        d << "; ";
    }
    return {ok, d.str()};
}

// Layers of `points` grouped by rank, duplicates included.
auto check_layers(std::vector<Point> const& points, std::vector<Point> const& probes, std::uint64_t seed) -> bool
{
    PointSet set(2);
    for (auto const& p : points) {
        set.push_back(p.coords);
    }
    auto const ranks = oracle_layers(set);
    if (!(max_partition(set, Mode::Hst, seed).assignment == ranks)
        || !(max_partition(set, Mode::ListHst, seed).assignment == ranks)) {
        return false;
    }
    std::vector<std::vector<Point>> layers(ranks.height);
    for (std::size_t i = 0; i < set.size(); ++i) {
        layers[ranks.ranks[i] - 1].push_back(points[i]);
    }
    for (std::size_t l = 0; l < layers.size(); ++l) {
        HalfSpaceTree tree(2, derive_seed(seed, l), false);
        ListHst list(2, ListHst::capacity_for(set.size()), derive_seed(seed, l + 100), false);
        for (auto const& p : layers[l]) {
            tree.insert(p);
            list.insert(p);
        }
        for (auto const& probe : probes) {
            bool const truth = std::ranges::any_of(layers[l], [&](Point const& q) { return dominates(q, probe); });
            if (tree.above(probe) != truth || list.above(probe) != truth) {
                return false;
            }
        }
    }
    return true;
}

auto exhaustive_small_cases() -> Outcome
{
    std::size_t sets = 0;
    for (std::size_t side : {3U, 4U}) {
        auto const grid = lattice(side, 2);
        auto const pool = grid.points();
        std::vector<std::size_t> pick;
        std::vector<Point> chosen;
        bool ok = true;
        // Every multiset of at most 6 lattice points.
        std::function<void(std::size_t)> recurse = [&](std::size_t from) {
            if (!ok) {
                return;
            }
            if (!chosen.empty()) {
                ok = check_layers(chosen, pool, sets);
                ++sets;
            }
            if (chosen.size() == 6) {
                return;
            }
            for (std::size_t i = from; i < pool.size(); ++i) {
                chosen.push_back(pool[i]);
                recurse(i);
                chosen.pop_back();
            }
        };
        recurse(0);
        if (!ok) {
            return {false, "mismatch on an exhaustive set over the " + std::to_string(side) + "x" + std::to_string(side) + " lattice"};
        }
        Rng rng(derive_seed(kSeed, side));
        for (std::size_t n = 7; n <= 9; ++n) {
            for (int t = 0; t < 20'000; ++t) {
                chosen.clear();
                for (std::size_t i = 0; i < n; ++i) {
                    chosen.push_back(pool[uniform_index(rng, pool.size())]);
                }
                if (!check_layers(chosen, pool, sets++)) {
                    return {false, "mismatch on a random " + std::to_string(n) + "-point set"};
                }
            }
        }
    }
    return {true, std::to_string(sets) + " point sets, every probe agrees with the linear scan"};
}

} // namespace

int main()
{
    std::vector<Criterion> const criteria{
        {1, "oracle equivalence", 120, oracle_equivalence},
        {2, "ordering probabilities eta1/eta2", 10, eta_probabilities},
        {3, "depth profile", 30, depth_profile_match},
        {4, "sub-linear unsuccessful search", 120, sublinear_search},
        {5, "d0 bound", 10, d0_scan},
        {6, "worst-case guard", 60, worst_case_guard},
        {7, "arbitrary-input bound", 120, arbitrary_input_bound},
        {8, "exhaustive small-case completeness", 60, exhaustive_small_cases},
    };

    int failures = 0;
    for (auto const& c : criteria) {
        auto const start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = c.body();
        } catch (std::exception const& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        double const elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool const in_time = elapsed <= c.budget_s;
        bool const pass = outcome.pass && in_time;
        failures += pass ? 0 : 1;
        std::printf("%s criterion %d %s: %s [%.2fs / %.0fs%s]\n", pass ? "PASS" : "FAIL", c.id, c.name,
                    outcome.detail.c_str(), elapsed, c.budget_s, in_time ? "" : " over budget");
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria failed\n", failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
