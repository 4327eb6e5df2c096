#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "conehull/exact_arith.hpp"

namespace conehull {

/// Uniform integer in [lo, hi] by rejection on raw mt19937_64 output, so the
/// stream is identical on every standard library.
std::int64_t uniform_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi);

/// Fisher-Yates with uniform_int.
template <typename T>
void shuffle_in_place(std::vector<T>& items, std::mt19937_64& rng)
{
    for (std::size_t i = items.size(); i > 1; --i)
    {
        const auto j = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(i - 1)));
        std::swap(items[i - 1], items[j]);
    }
}

/// SplitMix64 finalizer; derives independent seeds from (seed, index).
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index);

/**
 * A system of m forms over Q^n with rank exactly r.
 *
 * r rows are drawn with entries uniform in [-c, c] until they are
 * independent; each of the other m - r rows is an integer combination of
 * those r rows with multipliers in [-c, c]. The rows are then shuffled.
 * Requires 1 <= r <= min(n, m) and c >= 1.
 */
InequalitySystem random_system(std::size_t n, std::size_t m, std::size_t r, std::int64_t c, std::uint64_t seed);

}  // namespace conehull
