#ifndef MAXLAYERS_GENERATORS_HPP
#define MAXLAYERS_GENERATORS_HPP

#include "maxlayers/point.hpp"
#include "maxlayers/random.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace maxlayers {

enum class GeneratorKind {
    RandomOrder, // i.i.d. uniform in [0,1]^k
    Chain,       // (i/n, ..., i/n), i = 1..n; height n
    Antichain,   // pairwise incomparable points on a hyperplane of constant coordinate sum
    Duplicates,  // random base set, every vector repeated `multiplicity` times
    Grid,        // uniform draws from the side^k lattice {0, 1/(side-1), ..., 1}^k
    File,        // read from `path`
};

[[nodiscard]] auto to_string(GeneratorKind kind) -> std::string_view;
[[nodiscard]] auto parse_generator_kind(std::string_view text) -> std::optional<GeneratorKind>;

struct GeneratorSpec {
    GeneratorKind kind = GeneratorKind::RandomOrder;
    std::size_t n = 0;
    std::size_t k = 1;
    std::uint64_t seed = kDefaultSeed;
    std::size_t multiplicity = 3;
    std::size_t side = 4;
    std::string path;
};

// "KIND,n,k[,key=value...]" with keys mult= and side=, or "file,PATH".
// Throws InputError on malformed text.
[[nodiscard]] auto parse_generator_spec(std::string_view text, std::uint64_t seed) -> GeneratorSpec;
// Inverse of parse_generator_spec (the seed is not part of the text).
[[nodiscard]] auto to_string(GeneratorSpec const& spec) -> std::string;

// Throws InputError for invalid specs, e.g. an antichain with k = 1 and n > 1.
[[nodiscard]] auto generate(GeneratorSpec const& spec) -> PointSet;

// Every point of the side^k lattice, in lexicographic order.
[[nodiscard]] auto lattice(std::size_t side, std::size_t k) -> PointSet;

// A point uniform on {x >= 0, sum x = 1}: gaps between sorted uniform cuts.
[[nodiscard]] auto sample_simplex(Rng& rng, std::size_t k) -> std::vector<double>;

// n distinct random points with coordinate sum exactly 1 (k >= 2). Pairwise
// incomparable by construction; unlike generate() this skips the O(n^2 k) check.
[[nodiscard]] auto antichain_on_simplex(std::size_t n, std::size_t k, std::uint64_t seed) -> PointSet;

[[nodiscard]] auto is_antichain(PointSet const& points) -> bool;

} // namespace maxlayers

#endif
