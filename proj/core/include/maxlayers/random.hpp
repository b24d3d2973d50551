#ifndef MAXLAYERS_RANDOM_HPP
#define MAXLAYERS_RANDOM_HPP

#include <cstddef>
#include <cstdint>
#include <limits>
#include <random>
#include <span>
#include <string_view>
#include <utility>

namespace maxlayers {

// All randomness in the library flows through mt19937_64. The helpers below
// replace the standard distributions, whose algorithms are
// implementation-defined, so that a seed reproduces the same structure with
// any standard library.
using Rng = std::mt19937_64;

inline constexpr std::uint64_t kDefaultSeed = 20240611;

constexpr auto splitmix64(std::uint64_t x) noexcept -> std::uint64_t
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30U)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27U)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31U);
}

// Independent sub-stream seed for (master, stream).
constexpr auto derive_seed(std::uint64_t master, std::uint64_t stream) noexcept -> std::uint64_t
{
    return splitmix64(splitmix64(master) ^ splitmix64(stream + 0x632be59bd9b4e019ULL));
}

// Named sub-stream ("engine", "generator", "trials", ...). FNV-1a of the name.
constexpr auto derive_seed(std::uint64_t master, std::string_view name) noexcept -> std::uint64_t
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : name) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return derive_seed(master, h);
}

// Uniform integer in [0, n), n > 0, by rejection on the top of the range.
inline auto uniform_index(Rng& rng, std::size_t n) -> std::size_t
{
    auto const bound = static_cast<std::uint64_t>(n);
    auto const limit = std::numeric_limits<std::uint64_t>::max() - (std::numeric_limits<std::uint64_t>::max() % bound);
    std::uint64_t x = rng();
    while (x >= limit) {
        x = rng();
    }
    return static_cast<std::size_t>(x % bound);
}

// Uniform double in [0, 1) with 53 random bits.
inline auto uniform01(Rng& rng) -> double
{
    return static_cast<double>(rng() >> 11U) * 0x1.0p-53;
}

template <typename T>
void shuffle(std::span<T> items, Rng& rng)
{
    for (std::size_t i = items.size(); i > 1; --i) {
        std::size_t j = uniform_index(rng, i);
        using std::swap;
        swap(items[i - 1], items[j]);
    }
}

} // namespace maxlayers

#endif
