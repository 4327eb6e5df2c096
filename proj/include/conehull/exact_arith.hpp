#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "conehull/errors.hpp"

namespace conehull {

/// Exact arbitrary-precision fraction. gmpxx keeps every arithmetic result
/// in lowest terms with a positive denominator.
using Rational = mpq_class;

/// A point or direction in Q^n.
using QVector = std::vector<Rational>;

/// Left-hand side a_1 x_1 + ... + a_n x_n of one inequality `l(x) <= 0`.
struct LinearForm
{
    QVector coefficients;

    LinearForm() = default;
    explicit LinearForm(QVector c) : coefficients(std::move(c)) {}

    std::size_t dimension() const noexcept { return coefficients.size(); }
    bool is_zero() const;

    friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

/**
 * An ordered list of forms, each read as `l_j(x) <= 0`, over Q^n.
 *
 * The order of the forms is the order in which the incremental solver
 * processes them and is never altered.
 */
class InequalitySystem
{
public:
    InequalitySystem() = default;
    explicit InequalitySystem(std::size_t dimension) : dimension_(dimension) {}
    InequalitySystem(std::size_t dimension, std::vector<LinearForm> forms);

    std::size_t dimension() const noexcept { return dimension_; }
    std::size_t size() const noexcept { return forms_.size(); }
    const std::vector<LinearForm>& forms() const noexcept { return forms_; }
    const LinearForm& operator[](std::size_t j) const { return forms_[j]; }

    void add(LinearForm form);

    /// Coefficient rows, one per form.
    std::vector<QVector> rows() const;

    friend bool operator==(const InequalitySystem&, const InequalitySystem&) = default;

private:
    std::size_t dimension_ = 0;
    std::vector<LinearForm> forms_;
};

void require_dimension(const QVector& v, std::size_t n, const char* what);

Rational evaluate(const LinearForm& form, const QVector& x);
Rational dot(const QVector& a, const QVector& b);

/// a * x + b * y, component-wise.
QVector linear_combination(const Rational& a, const QVector& x, const Rational& b, const QVector& y);
QVector negated(QVector v);
QVector unit_vector(std::size_t n, std::size_t i);
std::vector<QVector> standard_basis(std::size_t n);
bool is_zero(const QVector& v);

/**
 * Reduced row echelon form of a list of rows, built incrementally.
 *
 * Rows are reduced against the current basis; a row whose remainder is
 * nonzero is normalized to pivot value 1 on its first nonzero column and
 * eliminated from all stored rows. Zero rows are skipped.
 */
class EchelonBasis
{
public:
    explicit EchelonBasis(std::size_t dimension) : dimension_(dimension) {}

    std::size_t dimension() const noexcept { return dimension_; }
    std::size_t rank() const noexcept { return rows_.size(); }

    /// Returns true when `row` was independent of the basis and got added.
    bool insert(const QVector& row);

    /// Remainder of `v` after eliminating every pivot column.
    QVector reduce(QVector v) const;

    bool contains(const QVector& v) const { return is_zero(reduce(v)); }

    /// Rows sorted by pivot column.
    std::vector<QVector> rows() const;
    std::vector<std::size_t> pivots() const;

private:
    std::size_t dimension_;
    std::vector<QVector> rows_;
    std::vector<std::size_t> pivots_;
};

std::size_t rank(std::span<const QVector> rows);
std::size_t rank(std::span<const LinearForm> forms);

/// Greedy in-order choice: a form is taken when it raises the rank.
std::vector<std::size_t> max_independent_subset(std::span<const LinearForm> forms);

/// Basis of {x : row . x = 0 for every row}, canonicalized as lines and sorted.
std::vector<QVector> null_space(std::span<const QVector> rows, std::size_t n);

/// Positive multiple of v with coprime integer entries.
QVector canonicalize_ray(const QVector& v);

/// canonicalize_ray, then flipped so the first nonzero entry is positive.
QVector canonicalize_line(const QVector& u);

struct Substitution;

/**
 * Solves l_j(x) = -y_j (j = 1..r) for r pivot variables.
 *
 * Pivots are taken on the first nonzero column of each row in turn; the
 * remaining n - r variables stay free.
 */
Substitution solve_for_substitution(std::span<const LinearForm> base_forms, std::size_t n);

}  // namespace conehull
