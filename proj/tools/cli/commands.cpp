#include "cli/commands.hpp"

#include "cli/grid.hpp"
#include "maxlayers/analysis.hpp"
#include "maxlayers/errors.hpp"
#include "maxlayers/io.hpp"
#include "maxlayers/oracle.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

namespace maxlayers::cli {

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::size_t kMinSamples = 30;
constexpr std::size_t kDepthBandMax = 10;
constexpr double kStandardErrors = 3.0;
constexpr double kEtaTolerance = 0.01;
constexpr double kSeriesFactor = 1.5;
constexpr double kSlopeSlack = 0.1;

auto seconds_since(Clock::time_point start) -> double
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

auto source_of(RunConfig const& config) -> std::string
{
    if (config.input_path) {
        return "file:" + *config.input_path;
    }
    return "gen:" + config.generator.value_or("");
}

auto summary_json(PointSet const& points, RunConfig const& config, SolveOutcome const& outcome) -> nlohmann::ordered_json
{
    nlohmann::ordered_json j;
    j["n"] = points.size();
    j["k"] = points.dimension();
    j["distinct"] = outcome.distinct_points;
    j["h"] = outcome.assignment.height;
    j["max_layer_size"] = outcome.assignment.width_observed;
    j["mode"] = std::string(to_string(config.mode));
    j["seed"] = config.seed;
    j["source"] = source_of(config);
    j["orthant_evaluations"] = outcome.metrics.orthant_evaluations;
    j["coordinate_comparisons"] = outcome.metrics.coordinate_comparisons;
    j["nodes_visited"] = outcome.metrics.nodes_visited;
    j["above_calls"] = outcome.metrics.above_calls;
    return j;
}

enum class Status { Pass, Inconclusive, Fail };

auto to_string(Status s) -> std::string
{
    switch (s) {
    case Status::Pass:
        return "PASS";
    case Status::Inconclusive:
        return "INCONCLUSIVE";
    case Status::Fail:
        return "FAIL";
    }
    return "?";
}

struct Band {
    std::string section;
    std::size_t k = 0;
    std::size_t w = 0; // 0: not tied to one w
    Status status = Status::Pass;
};

void write_bands(std::ostream& out, OutputFormat format, std::vector<Band> const& bands)
{
    for (auto const& b : bands) {
        if (format == OutputFormat::Csv) {
            out << "# band," << b.section << ",k=" << b.k << ",w=" << b.w << "," << to_string(b.status) << '\n';
        } else {
            nlohmann::ordered_json j{{"band", b.section}, {"k", b.k}, {"w", b.w}, {"status", to_string(b.status)}};
            out << j.dump() << '\n';
        }
    }
}

auto median(std::vector<double> v) -> double
{
    std::ranges::sort(v);
    auto const n = v.size();
    return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

// k^2 n^(1.5 + log_k(k-1)/2) log2 n: the expected List-HST cost when every
// query is unsuccessful (sqrt(n) trees, each searched in sqrt(n)^log_k(k-1)).
auto list_hst_bound(double n, std::size_t k) -> double
{
    auto const kk = static_cast<double>(k);
    double const exponent = k >= 2 ? 1.5 + std::log(kk - 1.0) / std::log(kk) / 2.0 : 1.5;
    return kk * kk * std::pow(n, exponent) * std::log2(n);
}

auto cell_seed(std::uint64_t master, std::string_view section, std::size_t k, std::size_t w) -> std::uint64_t
{
    return derive_seed(derive_seed(master, section), k * 1'000'003ULL + w);
}

} // namespace

auto to_string(SolveMode mode) -> std::string_view
{
    switch (mode) {
    case SolveMode::Hst:
        return "hst";
    case SolveMode::ListHst:
        return "list-hst";
    case SolveMode::Brute:
        return "brute";
    }
    return "?";
}

auto parse_solve_mode(std::string_view text) -> std::optional<SolveMode>
{
    if (text == "brute") {
        return SolveMode::Brute;
    }
    if (auto m = parse_mode(text)) {
        return *m == Mode::Hst ? SolveMode::Hst : SolveMode::ListHst;
    }
    return std::nullopt;
}

auto engine_seed(std::uint64_t master) -> std::uint64_t { return derive_seed(master, "engine"); }
auto generator_seed(std::uint64_t master) -> std::uint64_t { return derive_seed(master, "generator"); }
auto trials_seed(std::uint64_t master) -> std::uint64_t { return derive_seed(master, "trials"); }

auto default_engine(PointSet const& points, SolveMode mode, std::uint64_t seed) -> SolveOutcome
{
    if (mode == SolveMode::Brute) {
        SolveOutcome out;
        out.assignment = oracle_layers(points, &out.metrics);
        out.distinct_points = points.size();
        return out;
    }
    auto result = max_partition(points, mode == SolveMode::Hst ? Mode::Hst : Mode::ListHst, seed);
    return {std::move(result.assignment), result.metrics, result.distinct_points};
}

auto load_points(RunConfig const& config) -> PointSet
{
    if (config.input_path.has_value() == config.generator.has_value()) {
        throw InputError("exactly one of --input and --gen is required");
    }
    if (config.input_path) {
        return read_points_file(*config.input_path);
    }
    return generate(parse_generator_spec(*config.generator, generator_seed(config.seed)));
}

auto cmd_solve(RunConfig const& config, std::ostream& out, std::ostream& err) -> int
{
    auto const points = load_points(config);
    auto const start = Clock::now();
    auto const outcome = default_engine(points, config.mode, engine_seed(config.seed));
    auto const elapsed = seconds_since(start);

    auto summary = summary_json(points, config, outcome);
    auto const& ranks = outcome.assignment.ranks;
    if (config.format == OutputFormat::Csv) {
        out << "# maxlayers-labels v1\n";
        out << "index,rank\n";
        for (std::size_t i = 0; i < ranks.size(); ++i) {
            out << i << ',' << ranks[i] << '\n';
        }
        out << "# summary " << summary.dump() << '\n';
    } else {
        out << nlohmann::ordered_json{{"format", "maxlayers-labels"}, {"version", 1}}.dump() << '\n';
        for (std::size_t i = 0; i < ranks.size(); ++i) {
            out << nlohmann::ordered_json{{"index", i}, {"rank", ranks[i]}}.dump() << '\n';
        }
        out << nlohmann::ordered_json{{"summary", summary}}.dump() << '\n';
    }
    // Timing stays off the report so reports are reproducible byte for byte.
    err << "wall_time_s " << format_double(elapsed) << '\n';
    return kOk;
}

auto cmd_validate(RunConfig const& config, std::ostream& out, std::ostream& err, Engine const& engine) -> int
{
    auto const points = load_points(config);
    auto const outcome = engine(points, config.mode, engine_seed(config.seed));
    // Brute mode is the DP oracle itself; check it against peeling instead.
    auto const reference = config.mode == SolveMode::Brute ? oracle_layers_peeling(points) : oracle_layers(points);

    auto const& got = outcome.assignment.ranks;
    auto const& want = reference.ranks;
    if (got.size() != want.size()) {
        err << "MISMATCH: engine labeled " << got.size() << " points, oracle " << want.size() << '\n';
        return kMismatch;
    }
    for (std::size_t i = 0; i < got.size(); ++i) {
        if (got[i] != want[i]) {
            err << "MISMATCH at index " << i << ": " << to_string(config.mode) << " rank " << got[i]
                << ", oracle rank " << want[i] << '\n';
            return kMismatch;
        }
    }
    out << "OK n=" << points.size() << " h=" << reference.height << " mode=" << to_string(config.mode) << '\n';
    return kOk;
}

auto cmd_analyze(RunConfig const& config, std::ostream& out, std::ostream& err) -> int
{
    Grid const grid(config.grid, {"k", "w", "trials", "pairs", "probes"});
    auto const ks = grid.sizes("k", {4, 8});
    auto const ws = grid.sizes("w", {64, 256, 1024});
    auto const trials = grid.size("trials", 1000);
    auto const pairs = grid.size("pairs", 100000);
    auto const probes = grid.size("probes", 10);
    if (ks.empty() || ws.empty() || std::ranges::any_of(ks, [](auto k) { return k < 2; })
        || std::ranges::any_of(ws, [](auto w) { return w < 1; }) || trials < 1 || pairs < 1 || probes < 1) {
        throw InputError("grid: need k >= 2, w >= 1, trials, pairs, probes >= 1");
    }

    auto const seed = trials_seed(config.seed);
    bool const enough = trials >= kMinSamples;
    Table table({"section", "k", "w", "d", "empirical", "standard_error", "samples", "theory", "status"});
    std::vector<Band> bands;
    auto add = [&](std::string section, std::size_t k, std::string w, std::string d, Estimate const& e, double theory,
                   Status s) {
        table.add_row({std::move(section), std::to_string(k), std::move(w), std::move(d), format_double(e.mean),
                       format_double(e.standard_error), std::to_string(e.samples), format_double(theory),
                       to_string(s)});
    };

    for (auto k : ks) {
        std::vector<double> search_w;
        std::vector<double> search_mean;
        for (auto w : ws) {
            auto const profile = depth_profile(w, k);
            auto const hist = measure_depth_histogram(k, w, trials, cell_seed(seed, "depth", k, w));
            Status depth_band = enough ? Status::Pass : Status::Inconclusive;
            for (std::size_t d = 0; d <= std::min(kDepthBandMax, w - 1); ++d) {
                auto const& e = hist[d];
                Status s = Status::Inconclusive;
                if (enough) {
                    s = std::abs(e.mean - profile.values[d]) <= kStandardErrors * e.standard_error + 1e-9 ? Status::Pass
                                                                                                           : Status::Fail;
                }
                if (s == Status::Fail) {
                    depth_band = Status::Fail;
                }
                add("depth", k, std::to_string(w), std::to_string(d), e, profile.values[d], s);
            }
            bands.push_back({"depth", k, w, depth_band});

            double const mass = profile.mass();
            Status const mass_ok = std::abs(mass - static_cast<double>(w)) <= 1e-9 * static_cast<double>(w) ? Status::Pass
                                                                                                          : Status::Fail;
            add("depth-mass", k, std::to_string(w), "", {mass, 0.0, 1}, static_cast<double>(w), mass_ok);
            bands.push_back({"depth-mass", k, w, mass_ok});

            auto const arg = static_cast<double>(profile.argmax());
            Status const d0_ok = arg <= d0_bound(static_cast<double>(w), k) ? Status::Pass : Status::Fail;
            add("d0", k, std::to_string(w), "", {arg, 0.0, 1}, d0_bound(static_cast<double>(w), k), d0_ok);
            bands.push_back({"d0", k, w, d0_ok});

            auto const us = measure_unsuccessful_search(k, w, probes, trials, cell_seed(seed, "search", k, w));
            Status search_ok = Status::Inconclusive;
            if (enough) {
                search_ok = us.visits.mean <= kSeriesFactor * us.series ? Status::Pass : Status::Fail;
            }
            add("search", k, std::to_string(w), "", us.visits, us.series, search_ok);
            bands.push_back({"search", k, w, search_ok});
            search_w.push_back(static_cast<double>(w));
            search_mean.push_back(us.visits.mean);
        }

        double const exponent = u_bound_exponent(k);
        if (search_w.size() >= 2) {
            double const slope = loglog_slope(search_w, search_mean);
            Status const s = !enough ? Status::Inconclusive
                                     : (slope <= exponent + kSlopeSlack ? Status::Pass : Status::Fail);
            add("search-slope", k, "", "", {slope, 0.0, search_w.size()}, exponent, s);
            bands.push_back({"search-slope", k, 0, s});
        } else {
            add("search-slope", k, "", "", {0.0, 0.0, search_w.size()}, exponent, Status::Inconclusive);
            bands.push_back({"search-slope", k, 0, Status::Inconclusive});
        }

        auto const eta = estimate_eta(k, pairs, cell_seed(seed, "eta", k, 0));
        bool const eta_enough = pairs >= kMinSamples;
        auto judge = [&](Estimate const& e, double theory) {
            if (!eta_enough) {
                return Status::Inconclusive;
            }
            return std::abs(e.mean - theory) <= kEtaTolerance ? Status::Pass : Status::Fail;
        };
        Status const s1 = judge(eta.eta1, eta1(k));
        Status const s2 = judge(eta.eta2, eta2(k));
        Status const s0 = judge(eta.unordered, 0.5);
        add("eta1", k, "", "", eta.eta1, eta1(k), s1);
        add("eta2", k, "", "", eta.eta2, eta2(k), s2);
        add("eta-unordered", k, "", "", eta.unordered, 0.5, s0);
        bands.push_back({"eta1", k, 0, s1});
        bands.push_back({"eta2", k, 0, s2});
        bands.push_back({"eta-unordered", k, 0, s0});
    }

    if (config.format == OutputFormat::Csv) {
        out << "# maxlayers-analyze v1\n";
    }
    table.write(out, config.format);
    write_bands(out, config.format, bands);

    auto const failed = std::ranges::count_if(bands, [](Band const& b) { return b.status == Status::Fail; });
    auto const inconclusive = std::ranges::count_if(bands, [](Band const& b) { return b.status == Status::Inconclusive; });
    err << "analyze: " << bands.size() << " bands, " << failed << " FAIL, " << inconclusive << " INCONCLUSIVE\n";
    return kOk;
}

auto cmd_bench(RunConfig const& config, std::ostream& out, std::ostream& err) -> int
{
    Grid const grid(config.grid, {"gen", "n", "k", "mode", "seeds"});
    auto const gens = grid.strings("gen", {"antichain", "chain"});
    auto const ns = grid.sizes("n", {256, 512, 1024, 2048});
    auto const ks = grid.sizes("k", {4});
    auto const modes = grid.strings("mode", {"list-hst"});
    auto const seeds = grid.size("seeds", 3);
    if (ns.empty() || ks.empty() || seeds < 1 || std::ranges::any_of(ks, [](auto k) { return k < 1; })) {
        throw InputError("grid: need n, k >= 1 and seeds >= 1");
    }
    std::vector<GeneratorKind> kinds;
    for (auto const& g : gens) {
        auto kind = parse_generator_kind(g);
        if (!kind || *kind == GeneratorKind::File) {
            throw InputError("grid: bad generator '" + g + "'");
        }
        kinds.push_back(*kind);
    }
    std::vector<SolveMode> solve_modes;
    for (auto const& m : modes) {
        auto mode = parse_solve_mode(m);
        if (!mode) {
            throw InputError("grid: bad mode '" + m + "'");
        }
        solve_modes.push_back(*mode);
    }

    Table table({"gen", "n", "k", "mode", "seeds", "median_wall_s", "median_coordinate_comparisons",
                 "median_orthant_evaluations", "comparisons_per_k_n1.5_log2n", "comparisons_per_list_bound"});
    struct Slope {
        std::string gen;
        std::size_t k;
        std::string mode;
        double value;
    };
    std::vector<Slope> slopes;

    for (auto kind : kinds) {
        for (auto k : ks) {
            if (kind == GeneratorKind::Antichain && k == 1) {
                throw InputError("grid: antichain needs k >= 2");
            }
            for (auto mode : solve_modes) {
                std::vector<double> xs;
                std::vector<double> ys;
                for (auto n : ns) {
                    std::vector<double> wall;
                    std::vector<double> comparisons;
                    std::vector<double> evaluations;
                    for (std::size_t s = 0; s < seeds; ++s) {
                        GeneratorSpec spec;
                        spec.kind = kind;
                        spec.n = n;
                        spec.k = k;
                        spec.seed = derive_seed(generator_seed(config.seed), s);
                        auto const points = generate(spec);
                        auto const start = Clock::now();
                        auto const outcome = default_engine(points, mode, derive_seed(engine_seed(config.seed), s));
                        wall.push_back(seconds_since(start));
                        comparisons.push_back(static_cast<double>(outcome.metrics.coordinate_comparisons));
                        evaluations.push_back(static_cast<double>(outcome.metrics.orthant_evaluations));
                    }
                    auto const nn = static_cast<double>(n);
                    double const med = median(comparisons);
                    double const norm = n > 1 ? med / (static_cast<double>(k) * std::pow(nn, 1.5) * std::log2(nn)) : 0.0;
                    double const list_norm = n > 1 ? med / list_hst_bound(nn, k) : 0.0;
                    table.add_row({std::string(to_string(kind)), std::to_string(n), std::to_string(k),
                                   std::string(to_string(mode)), std::to_string(seeds), format_double(median(wall)),
                                   format_double(med), format_double(median(evaluations)), format_double(norm),
                                   format_double(list_norm)});
                    if (n > 1 && med > 0) {
                        xs.push_back(nn);
                        ys.push_back(med);
                    }
                }
                if (xs.size() >= 2) {
                    slopes.push_back({std::string(to_string(kind)), k, std::string(to_string(mode)), loglog_slope(xs, ys)});
                }
            }
        }
    }

    if (config.format == OutputFormat::Csv) {
        out << "# maxlayers-bench v1\n";
    }
    table.write(out, config.format);
    for (auto const& s : slopes) {
        if (config.format == OutputFormat::Csv) {
            out << "# slope," << s.gen << ",k=" << s.k << "," << s.mode << "," << format_double(s.value) << '\n';
        } else {
            out << nlohmann::ordered_json{{"slope", s.value}, {"gen", s.gen}, {"k", s.k}, {"mode", s.mode}}.dump() << '\n';
        }
    }
    err << "bench: " << table.rows().size() << " cells\n";
    return kOk;
}

auto cmd_generate(RunConfig const& config, std::ostream& out, std::ostream& /*err*/) -> int
{
    if (!config.generator) {
        throw InputError("generate needs --gen");
    }
    auto const points = load_points(config);
    out << "# maxlayers-points v1 gen=" << *config.generator << " seed=" << config.seed << '\n';
    write_points(out, points);
    return kOk;
}

auto run(int argc, char const* const* argv, std::ostream& out, std::ostream& err) -> int
{
    CLI::App app{"Maximal layers (iterated Pareto fronts) with half-space trees"};
    app.require_subcommand(1);

    RunConfig config;
    std::string mode_text = "list-hst";
    std::string format_text = "csv";
    std::string out_path;

    auto add_common = [&](CLI::App* sub, bool with_input, bool with_mode) {
        if (with_input) {
            auto* in = sub->add_option("--input", config.input_path, "Point file (one point per line)");
            auto* gen = sub->add_option("--gen", config.generator, "Generator KIND,n,k[,mult=M|side=S]");
            in->excludes(gen);
        }
        if (with_mode) {
            sub->add_option("--mode", mode_text, "hst | list-hst | brute")->capture_default_str();
        }
        sub->add_option("--seed", config.seed, "Master seed")->capture_default_str();
        sub->add_option("--out", out_path, "Output file (default: stdout)");
        sub->add_option("--format", format_text, "csv | json-lines")->capture_default_str();
    };

    auto* solve = app.add_subcommand("solve", "Label every point with its layer rank");
    add_common(solve, true, true);
    auto* validate = app.add_subcommand("validate", "Compare an engine mode against the brute-force oracle");
    add_common(validate, true, true);
    auto* analyze = app.add_subcommand("analyze", "Monte Carlo checks of the expected-cost analysis");
    add_common(analyze, false, false);
    analyze->add_option("--grid", config.grid, "e.g. k=4,8;w=64,256,1024;trials=1000;pairs=100000;probes=10");
    auto* bench = app.add_subcommand("bench", "Comparison counts and wall time over a grid");
    add_common(bench, false, false);
    bench->add_option("--grid", config.grid, "e.g. gen=antichain,chain;n=256,512;k=4,8;mode=list-hst;seeds=3");
    auto* gen = app.add_subcommand("generate", "Write a generated point set");
    add_common(gen, true, false);

    try {
        app.parse(argc, argv);
    } catch (CLI::CallForHelp const& e) {
        out << app.help();
        return kOk;
    } catch (CLI::CallForAllHelp const& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (CLI::ParseError const& e) {
        err << "error: " << e.what() << '\n';
        return kBadInput;
    }

    auto* chosen = app.get_subcommands().front();
    config.command = chosen->get_name();

    auto mode = parse_solve_mode(mode_text);
    if (!mode) {
        err << "error: unknown mode '" << mode_text << "'\n";
        return kBadInput;
    }
    config.mode = *mode;
    if (format_text == "csv") {
        config.format = OutputFormat::Csv;
    } else if (format_text == "json-lines") {
        config.format = OutputFormat::JsonLines;
    } else {
        err << "error: unknown format '" << format_text << "'\n";
        return kBadInput;
    }

    try {
        std::ostringstream buffer;
        int code = kOk;
        if (config.command == "solve") {
            code = cmd_solve(config, buffer, err);
        } else if (config.command == "validate") {
            code = cmd_validate(config, buffer, err);
        } else if (config.command == "analyze") {
            code = cmd_analyze(config, buffer, err);
        } else if (config.command == "bench") {
            code = cmd_bench(config, buffer, err);
        } else {
            code = cmd_generate(config, buffer, err);
        }
        if (out_path.empty()) {
            out << buffer.str();
        } else {
            std::ofstream file(out_path, std::ios::binary);
            if (!file) {
                err << "error: cannot write '" << out_path << "'\n";
                return kBadInput;
            }
            file << buffer.str();
        }
        return code;
    } catch (InputError const& e) {
        err << "error: " << e.what() << '\n';
        return kBadInput;
    } catch (std::exception const& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternal;
    }
}

} // namespace maxlayers::cli
