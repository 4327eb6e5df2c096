#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "conehull/exact_arith.hpp"
#include "conehull/mb_core.hpp"

namespace conehull {

/// Optionally signed integer or p/q with q > 0. Throws std::invalid_argument.
Rational parse_rational(std::string_view token);
std::string format_rational(const Rational& q);

/**
 * Reads a system file.
 *
 *     # comment
 *     n m
 *     a_11 ... a_1n
 *     ...
 *     a_m1 ... a_mn
 *
 * Blank lines and lines starting with '#' are skipped. Errors carry the
 * 1-based line number.
 */
InequalitySystem parse_system(std::string_view text);
std::string write_system(const InequalitySystem& system);

/// `U <count>`, its rows, `V <count>`, its rows.
std::string write_cone(const ConeDescription& cone);
ConeDescription parse_cone(std::string_view text, std::size_t dimension);

}  // namespace conehull
