#pragma once

#include "conehull/exact_arith.hpp"
#include "conehull/mb_core.hpp"

namespace conehull {

/**
 * Runs the incremental iteration from U = standard basis, V = {} and folds
 * every form of `system` in input order.
 */
ConeDescription solve_direct(const InequalitySystem& system, const StepOptions& options = {});

/**
 * Computes the generators of {x : l_j(x) <= 0 for all j}.
 *
 * With `as_is` the direct iteration is used. Otherwise unused variables are
 * dropped, the system is rewritten over y_j = -l_j(x) for a maximal
 * independent subset of forms, the remaining forms are folded starting from
 * V = E_r, and the result is mapped back.
 */
ConeDescription conehull(const InequalitySystem& system, bool as_is, const StepOptions& options = {});

}  // namespace conehull
