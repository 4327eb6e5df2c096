#include "conehull/random_system.hpp"

#include <algorithm>
#include <limits>

namespace conehull {

std::int64_t uniform_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi)
{
    if (lo > hi)
        throw PreconditionError("empty integer range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
    if (span == std::numeric_limits<std::uint64_t>::max())
        return static_cast<std::int64_t>(rng());
    const std::uint64_t buckets = span + 1;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % buckets;
    std::uint64_t x;
    do
        x = rng();
    while (x >= limit);
    return lo + static_cast<std::int64_t>(x % buckets);
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index)
{
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

InequalitySystem random_system(std::size_t n, std::size_t m, std::size_t r, std::int64_t c, std::uint64_t seed)
{
    if (r < 1 || r > std::min(n, m))
        throw PreconditionError("random_system needs 1 <= r <= min(n, m)");
    if (c < 1)
        throw PreconditionError("coefficient bound must be >= 1");

    std::mt19937_64 rng(seed);
    std::vector<QVector> base;
    do
    {
        base.assign(r, QVector(n));
        for (auto& row : base)
            for (auto& e : row)
                e = Rational(static_cast<long>(uniform_int(rng, -c, c)));
    } while (rank(std::span<const QVector>(base)) != r);

    std::vector<QVector> rows = base;
    for (std::size_t k = r; k < m; ++k)
    {
        QVector row(n, Rational(0));
        for (const auto& b : base)
        {
            const Rational mult(static_cast<long>(uniform_int(rng, -c, c)));
            if (sgn(mult) != 0)
                row = linear_combination(1, row, mult, b);
        }
        rows.push_back(std::move(row));
    }
    shuffle_in_place(rows, rng);

    InequalitySystem system(n);
    for (auto& row : rows)
        system.add(LinearForm(std::move(row)));
    return system;
}

}  // namespace conehull
