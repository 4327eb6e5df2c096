#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <string>
#include <vector>

#include "conehull/exact_arith.hpp"
#include "conehull/io.hpp"
#include "conehull/mb_core.hpp"
#include "conehull/random_system.hpp"

namespace conehull::testing {

inline QVector vec(std::initializer_list<const char*> entries)
{
    QVector v;
    for (auto e : entries)
        v.push_back(parse_rational(e));
    return v;
}

inline QVector ivec(std::initializer_list<long> entries)
{
    QVector v;
    for (auto e : entries)
        v.emplace_back(e);
    return v;
}

inline LinearForm form(std::initializer_list<long> coefficients)
{
    return LinearForm(ivec(coefficients));
}

inline InequalitySystem system_of(std::size_t n, std::initializer_list<std::initializer_list<long>> rows)
{
    InequalitySystem s(n);
    for (auto r : rows)
        s.add(form(r));
    return s;
}

inline std::vector<QVector> ivecs(std::initializer_list<std::initializer_list<long>> rows)
{
    std::vector<QVector> out;
    for (auto r : rows)
        out.push_back(ivec(r));
    return out;
}

inline ConeDescription cone_of(std::size_t n,
                               std::initializer_list<std::initializer_list<long>> lineality,
                               std::initializer_list<std::initializer_list<long>> rays)
{
    ConeDescription c;
    c.dimension = n;
    c.lineality = ivecs(lineality);
    c.rays = ivecs(rays);
    return c;
}

/// Dense system with every entry uniform in [-c, c]; rank is whatever falls out.
inline InequalitySystem random_dense_system(std::size_t n, std::size_t m, std::int64_t c, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    InequalitySystem s(n);
    for (std::size_t j = 0; j < m; ++j)
    {
        QVector row(n);
        for (auto& e : row)
            e = Rational(static_cast<long>(uniform_int(rng, -c, c)));
        s.add(LinearForm(std::move(row)));
    }
    return s;
}

/// Inserts `extra` all-zero columns at seeded positions.
inline InequalitySystem with_unused_variables(const InequalitySystem& s, std::size_t extra, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    const std::size_t n = s.dimension() + extra;
    std::vector<bool> unused(n, false);
    for (std::size_t k = 0; k < extra;)
    {
        const auto i = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(n - 1)));
        if (!unused[i])
        {
            unused[i] = true;
            ++k;
        }
    }
    InequalitySystem out(n);
    for (const auto& f : s.forms())
    {
        QVector row(n, Rational(0));
        std::size_t src = 0;
        for (std::size_t i = 0; i < n; ++i)
        {
            if (!unused[i])
                row[i] = f.coefficients[src++];
        }
        out.add(LinearForm(std::move(row)));
    }
    return out;
}

/// Independent rank: largest k with a nonzero k x k minor, by cofactor expansion.
inline Rational determinant(const std::vector<QVector>& m)
{
    const std::size_t k = m.size();
    if (k == 0)
        return 1;
    Rational det = 0;
    for (std::size_t c = 0; c < k; ++c)
    {
        if (sgn(m[0][c]) == 0)
            continue;
        std::vector<QVector> minor;
        for (std::size_t r = 1; r < k; ++r)
        {
            QVector row;
            for (std::size_t cc = 0; cc < k; ++cc)
            {
                if (cc != c)
                    row.push_back(m[r][cc]);
            }
            minor.push_back(row);
        }
        const Rational term = m[0][c] * determinant(minor);
        det += (c % 2 == 0) ? term : Rational(-term);
    }
    return det;
}

inline std::size_t rank_by_minors(const std::vector<QVector>& rows, std::size_t n)
{
    const std::size_t m = rows.size();
    for (std::size_t k = std::min(m, n); k > 0; --k)
    {
        for (std::size_t rmask = 0; rmask < (std::size_t{1} << m); ++rmask)
        {
            if (static_cast<std::size_t>(__builtin_popcountll(rmask)) != k)
                continue;
            for (std::size_t cmask = 0; cmask < (std::size_t{1} << n); ++cmask)
            {
                if (static_cast<std::size_t>(__builtin_popcountll(cmask)) != k)
                    continue;
                std::vector<QVector> sub;
                for (std::size_t r = 0; r < m; ++r)
                {
                    if (!(rmask >> r & 1))
                        continue;
                    QVector row;
                    for (std::size_t c = 0; c < n; ++c)
                    {
                        if (cmask >> c & 1)
                            row.push_back(rows[r][c]);
                    }
                    sub.push_back(row);
                }
                if (sgn(determinant(sub)) != 0)
                    return k;
            }
        }
    }
    return 0;
}

}  // namespace conehull::testing
