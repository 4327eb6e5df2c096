#include "conehull/solver.hpp"

#include <algorithm>
#include <vector>

#include "conehull/reduce.hpp"

namespace conehull {

namespace {

ConeDescription fold(ConeDescription cone,
                     std::vector<LinearForm> processed,
                     const std::vector<LinearForm>& pending,
                     bool lineality_must_stay_empty,
                     const StepOptions& options)
{
    EvalTableau tableau = EvalTableau::build(processed, cone.rays);
    for (const auto& l : pending)
    {
        auto step = mb_step(cone, processed, l, tableau, options);
        cone = std::move(step.cone);
        tableau = std::move(step.tableau);
        processed.push_back(l);
        if (lineality_must_stay_empty && !cone.lineality.empty())
            throw InvariantError("reduced iteration produced a lineality vector");
    }
    return cone;
}

}  // namespace

ConeDescription solve_direct(const InequalitySystem& system, const StepOptions& options)
{
    return fold(full_space(system.dimension()), {}, system.forms(), false, options);
}

ConeDescription conehull(const InequalitySystem& system, bool as_is, const StepOptions& options)
{
    if (as_is)
        return solve_direct(system, options);

    const std::size_t n = system.dimension();
    auto stripped = strip_unused_variables(system);
    if (stripped.system.dimension() == 0)
        return full_space(n);

    auto reduced = change_of_variables(stripped.system);
    const std::size_t r = reduced.substitution.rank;

    ConeDescription start;
    start.dimension = r;
    start.rays = standard_basis(r);
    std::sort(start.rays.begin(), start.rays.end());

    std::vector<LinearForm> effaced;
    for (std::size_t i = 0; i < r; ++i)
        effaced.emplace_back(negated(unit_vector(r, i)));

    auto cone_y = fold(std::move(start), std::move(effaced), reduced.system.forms(), true, options);
    return back_substitute(cone_y, reduced.substitution, stripped.bad_indices, n);
}

}  // namespace conehull
