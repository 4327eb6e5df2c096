#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "conehull/exact_arith.hpp"

namespace conehull {

/**
 * Change of variables y_j = -l_j(x) for a set of r independent base forms.
 *
 * Each pivot variable x_{pivot_indices[k]} is expressed as
 *
 *     x_{pivot_indices[k]} = y_coefficients[k] . y + free_coefficients[k] . x_free
 *
 * where x_free lists the variables at `free_indices`. Free variables map to
 * themselves. Indices are 0-based.
 */
struct Substitution
{
    std::size_t dimension = 0;  ///< n, number of original variables
    std::size_t rank = 0;       ///< r, number of new variables y
    std::vector<std::size_t> pivot_indices;
    std::vector<std::size_t> free_indices;
    std::vector<QVector> y_coefficients;     ///< r rows of length r
    std::vector<QVector> free_coefficients;  ///< r rows of length n - r

    /// x as a function of (y, x_free).
    QVector apply(const QVector& y, const QVector& free_values) const;

    /// Coefficients of l(x(y, x_free)) split into the y part and the free part.
    std::pair<QVector, QVector> substitute(const LinearForm& form) const;
};

}  // namespace conehull
