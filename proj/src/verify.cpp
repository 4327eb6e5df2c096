#include "conehull/verify.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace conehull {

CheckReport check_solutions(const InequalitySystem& system, std::span<const QVector> candidates)
{
    CheckReport report;
    for (std::size_t k = 0; k < candidates.size(); ++k)
    {
        const QVector& x = candidates[k];
        require_dimension(x, system.dimension(), "candidate");
        std::size_t violated = system.size();
        for (std::size_t j = 0; j < system.size(); ++j)
        {
            if (sgn(evaluate(system[j], x)) > 0)
            {
                violated = j;
                break;
            }
        }
        if (violated == system.size())
            report.valid.push_back(x);
        else
            report.invalid.push_back({k, x, violated});
    }
    return report;
}

std::vector<std::size_t> tight_set(const InequalitySystem& system, const QVector& v)
{
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < system.size(); ++j)
    {
        if (sgn(evaluate(system[j], v)) == 0)
            out.push_back(j);
    }
    return out;
}

QVector reduce_modulo(const QVector& v, const EchelonBasis& lineality)
{
    QVector r = lineality.reduce(v);
    return is_zero(r) ? r : canonicalize_ray(r);
}

ConeDescription oracle_enumerate(const InequalitySystem& system, const OracleLimits& limits)
{
    const std::size_t n = system.dimension();
    const std::size_t m = system.size();
    if (n > limits.max_dimension || m > limits.max_forms)
        throw PreconditionError("oracle limited to n <= " + std::to_string(limits.max_dimension) +
                                " and m <= " + std::to_string(limits.max_forms));

    const auto rows = system.rows();
    ConeDescription out;
    out.dimension = n;
    out.lineality = null_space(rows, n);

    EchelonBasis lineality(n);
    for (const auto& u : out.lineality)
        lineality.insert(u);

    const std::size_t target = out.lineality.size() + 1;
    std::set<QVector> found;
    for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask)
    {
        std::vector<QVector> subset;
        for (std::size_t j = 0; j < m; ++j)
        {
            if (mask & (std::size_t{1} << j))
                subset.push_back(rows[j]);
        }
        const auto space = null_space(subset, n);
        if (space.size() != target)
            continue;

        QVector direction;
        for (const auto& b : space)
        {
            direction = lineality.reduce(b);
            if (!is_zero(direction))
                break;
        }
        if (is_zero(direction))
            continue;

        for (const QVector& d : {direction, negated(direction)})
        {
            const bool feasible = std::all_of(system.forms().begin(), system.forms().end(),
                                              [&](const LinearForm& f) { return sgn(evaluate(f, d)) <= 0; });
            if (feasible)
                found.insert(canonicalize_ray(d));
        }
    }

    std::vector<QVector> candidates(found.begin(), found.end());
    std::vector<std::vector<std::size_t>> tight;
    for (const auto& v : candidates)
        tight.push_back(tight_set(system, v));
    for (std::size_t a = 0; a < candidates.size(); ++a)
    {
        bool extreme = true;
        for (std::size_t b = 0; b < candidates.size() && extreme; ++b)
        {
            if (a != b && std::includes(tight[b].begin(), tight[b].end(), tight[a].begin(), tight[a].end()))
                extreme = false;
        }
        if (extreme)
            out.rays.push_back(candidates[a]);
    }
    return out;
}

bool cones_equal(const ConeDescription& a, const ConeDescription& b, const InequalitySystem& system)
{
    const std::size_t n = system.dimension();
    if (a.dimension != n || b.dimension != n)
        throw DimensionError("cones compared over different dimensions");

    EchelonBasis la(n), lb(n), both(n);
    for (const auto& u : a.lineality)
    {
        la.insert(u);
        both.insert(u);
    }
    for (const auto& u : b.lineality)
    {
        lb.insert(u);
        both.insert(u);
    }
    if (la.rank() != lb.rank() || la.rank() != both.rank())
        return false;

    std::set<QVector> ra, rb;
    for (const auto& v : a.rays)
        ra.insert(reduce_modulo(v, la));
    for (const auto& v : b.rays)
        rb.insert(reduce_modulo(v, la));
    return ra == rb;
}

}  // namespace conehull
