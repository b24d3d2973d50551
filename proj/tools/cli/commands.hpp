#ifndef MAXLAYERS_CLI_COMMANDS_HPP
#define MAXLAYERS_CLI_COMMANDS_HPP

#include "maxlayers/generators.hpp"
#include "maxlayers/layer_engine.hpp"
#include "maxlayers/report.hpp"

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>

namespace maxlayers::cli {

enum ExitCode : int {
    kOk = 0,
    kInternal = 1,
    kBadInput = 2,
    kMismatch = 3,
};

enum class SolveMode { Hst, ListHst, Brute };

[[nodiscard]] auto to_string(SolveMode mode) -> std::string_view;
[[nodiscard]] auto parse_solve_mode(std::string_view text) -> std::optional<SolveMode>;

struct RunConfig {
    std::string command;
    std::optional<std::string> input_path;
    std::optional<std::string> generator; // "KIND,n,k[,params]"
    SolveMode mode = SolveMode::ListHst;
    std::uint64_t seed = kDefaultSeed;
    OutputFormat format = OutputFormat::Csv;
    std::string grid;
};

struct SolveOutcome {
    LayerAssignment assignment;
    QueryMetrics metrics;
    std::size_t distinct_points = 0;
};

// The engine under test for `validate`; tests substitute a faulty one.
using Engine = std::function<SolveOutcome(PointSet const&, SolveMode, std::uint64_t)>;

// Engine seed and generator seed are separate named sub-streams of the
// master seed.
[[nodiscard]] auto engine_seed(std::uint64_t master) -> std::uint64_t;
[[nodiscard]] auto generator_seed(std::uint64_t master) -> std::uint64_t;
[[nodiscard]] auto trials_seed(std::uint64_t master) -> std::uint64_t;

[[nodiscard]] auto default_engine(PointSet const& points, SolveMode mode, std::uint64_t seed) -> SolveOutcome;

// Shared ingestion for every command: --input file or --gen spec.
[[nodiscard]] auto load_points(RunConfig const& config) -> PointSet;

// Each command writes its report to `out`, diagnostics to `err`, and
// returns an ExitCode. Input problems surface as InputError and are mapped
// to exit codes by run().
auto cmd_solve(RunConfig const& config, std::ostream& out, std::ostream& err) -> int;
auto cmd_validate(RunConfig const& config, std::ostream& out, std::ostream& err,
                  Engine const& engine = default_engine) -> int;
auto cmd_analyze(RunConfig const& config, std::ostream& out, std::ostream& err) -> int;
auto cmd_bench(RunConfig const& config, std::ostream& out, std::ostream& err) -> int;
auto cmd_generate(RunConfig const& config, std::ostream& out, std::ostream& err) -> int;

// Parses argv, dispatches, and maps exceptions to exit codes.
auto run(int argc, char const* const* argv, std::ostream& out, std::ostream& err) -> int;

} // namespace maxlayers::cli

#endif
