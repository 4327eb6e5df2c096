#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "conehull/exact_arith.hpp"
#include "conehull/mb_core.hpp"

namespace conehull {

struct InvalidCandidate
{
    std::size_t position;  ///< index in the candidate list
    QVector vector;
    std::size_t form;  ///< first form with l(vector) > 0
};

struct CheckReport
{
    std::vector<QVector> valid;
    std::vector<InvalidCandidate> invalid;

    bool all_valid() const noexcept { return invalid.empty(); }
};

/// Splits candidates into solutions of the system and violators.
CheckReport check_solutions(const InequalitySystem& system, std::span<const QVector> candidates);

struct OracleLimits
{
    std::size_t max_dimension = 6;
    std::size_t max_forms = 10;
};

/**
 * Brute-force generator enumeration for small systems.
 *
 * U is the null space of all forms. A ray candidate comes from every subset
 * of forms whose null space has dimension |U| + 1; its direction modulo U is
 * oriented to satisfy the system or dropped. Rays whose tight set lies
 * inside another ray's tight set are discarded. Rays are reported reduced
 * modulo the echelon basis of U. Throws PreconditionError above `limits`.
 */
ConeDescription oracle_enumerate(const InequalitySystem& system, const OracleLimits& limits = {});

/// canonicalize_ray of v reduced against `lineality`; zero vectors pass through.
QVector reduce_modulo(const QVector& v, const EchelonBasis& lineality);

/**
 * Same lineality space and same extreme rays modulo that space.
 *
 * `system` only fixes the ambient dimension.
 */
bool cones_equal(const ConeDescription& a, const ConeDescription& b, const InequalitySystem& system);

/// Indices of forms vanishing on v.
std::vector<std::size_t> tight_set(const InequalitySystem& system, const QVector& v);

}  // namespace conehull
