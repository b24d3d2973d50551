#include "support.hpp"

#include <doctest.h>

#include <cmath>

using namespace maxlayers;

TEST_CASE("depth profile small cases")
{
    auto const one = depth_profile(1, 4);
    REQUIRE(one.values.size() == 1);
    CHECK(one.values[0] == 1.0);
    CHECK(depth_profile(0, 4).values.empty());

    for (std::size_t k = 1; k <= 8; ++k) {
        CHECK(depth_profile(2, k).values[1] == doctest::Approx(1.0));
        CHECK(depth_profile(3, k).values[1] == doctest::Approx(2.0 - 1.0 / static_cast<double>(k)));
    }
    CHECK(depth_profile(3, 4).values[1] == doctest::Approx(1.75));
}

TEST_CASE("depth profile mass, shape and root")
{
    for (std::size_t k : {1U, 2U, 4U, 8U, 16U}) {
        for (std::size_t w : {1U, 2U, 3U, 10U, 64U, 300U, 1024U}) {
            auto const p = depth_profile(w, k);
            CAPTURE(k);
            CAPTURE(w);
            CHECK(std::abs(p.mass() - static_cast<double>(w)) <= 1e-12 * static_cast<double>(w));
            CHECK(p.values[0] == 1.0);
            CHECK(std::ranges::all_of(p.values, [](double v) { return v >= 0.0; }));
            if (w >= 2) {
                CHECK(p.is_unimodal());
            }
        }
    }
}

TEST_CASE("incremental recurrence equals the per-w evaluation")
{
    DepthProfileRecurrence rec(4);
    for (std::size_t w = 1; w <= 200; ++w) {
        rec.step();
        if (w % 50 == 0) {
            auto const p = depth_profile(w, 4);
            for (std::size_t d = 0; d < 20; ++d) {
                CHECK(rec.value(d) == doctest::Approx(p.values[d]).epsilon(1e-12));
            }
            CHECK(rec.argmax() == p.argmax());
        }
    }
}

TEST_CASE("closed form agrees with the recurrence")
{
    for (std::size_t k : {2U, 4U, 8U}) {
        for (std::size_t w = 1; w <= 64; ++w) {
            auto const p = depth_profile(w, k);
            for (std::size_t d = 0; d <= 6 && d < w; ++d) {
                double const cf = depth_profile_closed_form(w, k, d);
                CAPTURE(k);
                CAPTURE(w);
                CAPTURE(d);
                CHECK(std::abs(cf - p.values[d]) <= 1e-9 * std::max(1.0, p.values[d]));
            }
        }
    }
}

TEST_CASE("eta formulas")
{
    CHECK(eta1(4) == doctest::Approx(0.7));
    CHECK(eta2(4) == doctest::Approx(7.0 / 12.0));
    CHECK(eta1(2) == doctest::Approx(5.0 / 6.0));
    CHECK(eta1(1) == doctest::Approx(1.0));
    CHECK(eta1(1'000'000) == doctest::Approx(0.5).epsilon(1e-5));
}

TEST_CASE("eta estimator")
{
    // The larger-mu point holds the overall maximum; it sits in coordinate 0
    // with probability 1/k, and otherwise both first coordinates are i.i.d.
    // uniform below it. Hence Pr = 1/k + (1 - 1/k) / 2.
    for (std::size_t k : {1U, 2U, 4U, 8U}) {
        auto const e = estimate_eta(k, 100'000, derive_seed(1, k));
        double const exact = 0.5 + 0.5 / static_cast<double>(k);
        CAPTURE(k);
        CHECK(std::abs(e.eta1.mean - exact) <= 4.0 * e.eta1.standard_error + 1e-12);
        CHECK(std::abs(e.unordered.mean - 0.5) <= 0.01);
        CHECK(e.eta1.samples == 100'000);
    }
    auto const two = estimate_eta(2, 100'000, 3);
    CHECK(std::abs(two.eta2.mean - eta2(2)) <= 0.01);

    auto const a = estimate_eta(4, 1000, 9);
    auto const b = estimate_eta(4, 1000, 9);
    CHECK(a.eta1.mean == b.eta1.mean);
    CHECK(a.eta2.samples == b.eta2.samples);
}

TEST_CASE("search exponent and depth bound")
{
    CHECK(u_bound_exponent(4) == doctest::Approx(0.7427).epsilon(1e-4));
    CHECK(d0_bound(256, 4) == doctest::Approx(6.0));
    double worst = 0.0;
    for (std::size_t k = 2; k <= (std::size_t{1} << 20U); ++k) {
        worst = std::max(worst, u_bound_exponent(k));
    }
    CHECK(worst < 1.0);
}

TEST_CASE("most populated depth stays within log_k w + 2")
{
    for (std::size_t k : {4U, 8U, 16U}) {
        DepthProfileRecurrence rec(k);
        for (std::size_t w = 1; w <= 2048; ++w) {
            rec.step();
            CHECK(static_cast<double>(rec.argmax()) <= d0_bound(static_cast<double>(w), k));
        }
    }
}

TEST_CASE("tail sums")
{
    std::vector<double> const zeros(10, 0.0);
    auto const z = lemma4_tail(zeros, 0.5, 3);
    CHECK(z.exact == 0.0);
    CHECK(z.bound == 0.0);

    std::vector<double> const ones(200, 1.0);
    auto const g = lemma4_tail(ones, 0.5, 0);
    CHECK(g.exact == doctest::Approx(2.0));
    CHECK(g.bound == doctest::Approx(2.0));

    std::vector<double> const rising{1.0, 2.0, 3.0};
    CHECK_THROWS_AS((void)lemma4_tail(rising, 0.5, 0), ContractError);
    CHECK_NOTHROW((void)lemma4_tail(rising, 0.5, 2));
    CHECK_THROWS_AS((void)lemma4_tail(ones, 1.0, 0), ContractError);
}

TEST_CASE("tail bounds hold on random non-increasing tails")
{
    Rng rng(2024);
    for (int c = 0; c < 1000; ++c) {
        std::size_t const len = 1 + uniform_index(rng, 60);
        std::size_t const r = uniform_index(rng, len);
        std::vector<double> b(len);
        for (auto& x : b) {
            x = 10.0 * uniform01(rng);
        }
        // Sort the tail from r on in decreasing order.
        std::sort(b.begin() + static_cast<std::ptrdiff_t>(r), b.end(), std::greater<>());
        double const m = 0.999 * uniform01(rng);
        auto const t = lemma4_tail(b, m, r);
        CHECK(t.exact <= t.bound * (1.0 + 1e-12));

        std::size_t const k = 4 + uniform_index(rng, 13);
        auto const tk = lemma4_tail(b, eta1(k), r);
        CHECK(tk.exact <= corollary2_bound(b, k, r) * (1.0 + 1e-12));
    }
}

TEST_CASE("unsuccessful search on a single point visits one node")
{
    auto const u = measure_unsuccessful_search(4, 1, 10, 20, 7);
    CHECK(u.visits.mean == 1.0);
    CHECK(u.visits.standard_error == 0.0);
    CHECK(u.visits.samples == 200);
}

TEST_CASE("unsuccessful search stays close to the series")
{
    for (std::size_t w : {64U, 256U}) {
        auto const u = measure_unsuccessful_search(4, w, 10, 100, derive_seed(8, w));
        double const ratio = u.visits.mean / u.series;
        CAPTURE(w);
        CHECK(ratio >= 0.5);
        CHECK(ratio <= 2.0);
    }
}

TEST_CASE("depth histogram estimates")
{
    auto const h = measure_depth_histogram(4, 32, 50, 3);
    REQUIRE(h.size() == 32);
    CHECK(h[0].mean == 1.0);
    double total = 0.0;
    for (auto const& e : h) {
        total += e.mean;
        CHECK(e.samples == 50);
    }
    CHECK(total == doctest::Approx(32.0));
    auto const again = measure_depth_histogram(4, 32, 50, 3);
    CHECK(again[3].mean == h[3].mean);
}

TEST_CASE("statistics helpers")
{
    std::vector<double> const x{1, 2, 4, 8, 16};
    std::vector<double> y;
    for (double v : x) {
        y.push_back(3.0 * std::pow(v, 1.5));
    }
    CHECK(loglog_slope(x, y) == doctest::Approx(1.5));

    RunningStats s;
    for (double v : {1.0, 2.0, 3.0, 4.0}) {
        s.add(v);
    }
    CHECK(s.mean() == doctest::Approx(2.5));
    CHECK(s.variance() == doctest::Approx(5.0 / 3.0));
    CHECK(s.standard_error() == doctest::Approx(std::sqrt(5.0 / 12.0)));
}

TEST_CASE("experiment records serialize to one line")
{
    ExperimentRecord r;
    r.spec = parse_generator_spec("chain,10,2", 5);
    r.mode = "hst";
    r.seed = 5;
    r.metrics.nodes_visited = 3;
    r.derived["slope"] = 1.25;
    auto const line = to_json_line(r);
    CHECK(line.find('\n') == std::string::npos);
    CHECK(line.find("\"slope\":1.25") != std::string::npos);
    CHECK(line.find("wall_time") == std::string::npos);
    r.wall_time = 0.5;
    CHECK(to_json_line(r).find("\"wall_time_s\":0.5") != std::string::npos);
}
