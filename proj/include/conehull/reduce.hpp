#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "conehull/exact_arith.hpp"
#include "conehull/mb_core.hpp"
#include "conehull/substitution.hpp"

namespace conehull {

/// What preprocessing did to a system, enough to map results back.
struct ReductionRecord
{
    std::vector<std::size_t> bad_indices;  ///< 0-based variables absent from every form
    std::size_t original_dimension = 0;
    std::optional<Substitution> substitution;
};

struct StrippedSystem
{
    InequalitySystem system;
    std::vector<std::size_t> bad_indices;
};

/// Drops every variable with a zero coefficient in all forms, keeping order.
StrippedSystem strip_unused_variables(const InequalitySystem& system);

struct ReducedSystem
{
    InequalitySystem system;  ///< m - r forms over y_1..y_r
    Substitution substitution;
    std::vector<std::size_t> base_indices;
};

/**
 * Substitutes y_j = -l_j(x) for a greedy maximal independent subset of the
 * forms. The r base forms become -y_j <= 0 and are left out of the result;
 * the solver starts from V = E_r instead. Requires rank >= 1.
 */
ReducedSystem change_of_variables(const InequalitySystem& system);

/**
 * Maps a cone over y back to the original n coordinates.
 *
 * Free-variable unit assignments (with y = 0) and the unused variables span
 * the lineality space; each ray v becomes x(y = v, x_free = 0).
 */
ConeDescription back_substitute(const ConeDescription& cone_y,
                                const Substitution& sub,
                                const std::vector<std::size_t>& bad_indices,
                                std::size_t original_n);

}  // namespace conehull
