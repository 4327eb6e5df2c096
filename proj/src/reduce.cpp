#include "conehull/reduce.hpp"

#include <algorithm>

namespace conehull {

StrippedSystem strip_unused_variables(const InequalitySystem& system)
{
    const std::size_t n = system.dimension();
    std::vector<std::size_t> used;
    StrippedSystem out;
    for (std::size_t i = 0; i < n; ++i)
    {
        const bool occurs = std::any_of(system.forms().begin(), system.forms().end(),
                                        [i](const LinearForm& f) { return sgn(f.coefficients[i]) != 0; });
        (occurs ? used : out.bad_indices).push_back(i);
    }

    out.system = InequalitySystem(used.size());
    for (const auto& f : system.forms())
    {
        QVector c;
        c.reserve(used.size());
        for (auto i : used)
            c.push_back(f.coefficients[i]);
        out.system.add(LinearForm(std::move(c)));
    }
    return out;
}

ReducedSystem change_of_variables(const InequalitySystem& system)
{
    const auto& forms = system.forms();
    auto base = max_independent_subset(forms);
    if (base.empty())
        throw PreconditionError("change of variables needs a system of rank >= 1");

    std::vector<LinearForm> base_forms;
    for (auto j : base)
        base_forms.push_back(forms[j]);

    ReducedSystem out{InequalitySystem(base.size()), solve_for_substitution(base_forms, system.dimension()), base};

    std::vector<bool> in_base(forms.size(), false);
    for (auto j : base)
        in_base[j] = true;
    for (std::size_t j = 0; j < forms.size(); ++j)
    {
        if (in_base[j])
            continue;
        auto [on_y, on_free] = out.substitution.substitute(forms[j]);
        if (!is_zero(on_free))
            throw InvariantError("substituted form still depends on a free variable");
        out.system.add(LinearForm(std::move(on_y)));
    }
    return out;
}

ConeDescription back_substitute(const ConeDescription& cone_y,
                                const Substitution& sub,
                                const std::vector<std::size_t>& bad_indices,
                                std::size_t original_n)
{
    if (cone_y.dimension != sub.rank)
        throw DimensionError("cone dimension does not match the substitution rank");
    if (sub.dimension + bad_indices.size() != original_n)
        throw DimensionError("substitution and unused variables do not cover the original dimension");

    std::vector<bool> bad(original_n, false);
    for (auto b : bad_indices)
        bad.at(b) = true;
    std::vector<std::size_t> used;
    for (std::size_t i = 0; i < original_n; ++i)
    {
        if (!bad[i])
            used.push_back(i);
    }
    auto embed = [&](const QVector& x) {
        QVector out(original_n, Rational(0));
        for (std::size_t k = 0; k < used.size(); ++k)
            out[used[k]] = x[k];
        return out;
    };

    ConeDescription out;
    out.dimension = original_n;

    const std::size_t free_count = sub.free_indices.size();
    const QVector y_zero(sub.rank, Rational(0));
    for (std::size_t f = 0; f < free_count; ++f)
        out.lineality.push_back(embed(sub.apply(y_zero, unit_vector(free_count, f))));
    for (auto b : bad_indices)
        out.lineality.push_back(unit_vector(original_n, b));

    const QVector free_zero(free_count, Rational(0));
    for (const auto& u : cone_y.lineality)
        out.lineality.push_back(embed(sub.apply(u, free_zero)));
    for (const auto& v : cone_y.rays)
        out.rays.push_back(embed(sub.apply(v, free_zero)));

    out.normalize();
    return out;
}

}  // namespace conehull
