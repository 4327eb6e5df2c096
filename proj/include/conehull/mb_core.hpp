#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "conehull/exact_arith.hpp"

namespace conehull {

/**
 * Generator description of a polyhedral cone C = L + P.
 *
 * `lineality` is a basis U of the lineality space L, each vector normalized
 * with canonicalize_line. `rays` is the set V of extreme rays of the
 * strongly convex part P, each normalized with canonicalize_ray. Both lists
 * are sorted lexicographically and V holds no duplicates once normalize()
 * has run.
 */
struct ConeDescription
{
    std::size_t dimension = 0;
    std::vector<QVector> lineality;
    std::vector<QVector> rays;

    /// Canonicalize, sort and deduplicate both lists in place.
    void normalize();

    friend bool operator==(const ConeDescription&, const ConeDescription&) = default;
};

/// The whole space Q^n: U = standard basis, V empty.
ConeDescription full_space(std::size_t n);

enum class Adjacency
{
    combinatorial,  ///< no third ray is tight on the pair's common tight set
    rank,           ///< the common tight set has rank >= rank(processed) - 2
};

struct StepOptions
{
    Adjacency adjacency = Adjacency::combinatorial;
    std::optional<std::chrono::steady_clock::time_point> deadline;
};

/**
 * Cached values l_j(v) of every processed form on every ray of V.
 *
 * Stored ray-major; `zero_set(k)` is the tight set of ray k as a bitset
 * over processed forms.
 */
class EvalTableau
{
public:
    EvalTableau() = default;

    static EvalTableau build(std::span<const LinearForm> processed, std::span<const QVector> rays);

    std::size_t form_count() const noexcept { return forms_; }
    std::size_t ray_count() const noexcept { return columns_.size(); }

    const Rational& value(std::size_t form, std::size_t ray) const { return columns_.at(ray).at(form); }
    const std::vector<Rational>& column(std::size_t ray) const { return columns_.at(ray); }
    const boost::dynamic_bitset<>& zero_set(std::size_t ray) const { return zeros_.at(ray); }

    /// Exact recomputation check; O(forms * rays * n).
    bool consistent_with(std::span<const LinearForm> processed, std::span<const QVector> rays) const;

    void append_ray(std::vector<Rational> column);

private:
    explicit EvalTableau(std::size_t forms) : forms_(forms) {}

    std::size_t forms_ = 0;
    std::vector<std::vector<Rational>> columns_;
    std::vector<boost::dynamic_bitset<>> zeros_;
};

struct LinealityTransform
{
    std::vector<QVector> lineality;  ///< basis of L intersected with {l = 0}
    QVector pivot_ray;               ///< -sign(l(u)) u, so l(pivot_ray) < 0
};

/**
 * Rotates the lineality basis into the hyperplane l = 0.
 *
 * Uses the first u in U with l(u) != 0 and maps every other u_i to
 * l(u) u_i - l(u_i) u. Throws PreconditionError when l vanishes on U.
 */
LinealityTransform transform_lineality(std::span<const QVector> lineality, const LinearForm& l);

/// {n} together with -l(n) v + l(v) n for each v; requires l(n) < 0.
std::vector<QVector> transform_rays(std::span<const QVector> rays, const QVector& pivot_ray, const LinearForm& l);

/// canonicalize_ray(-l(v-) v+ + l(v+) v-); requires l(v-) < 0 < l(v+).
QVector combine(const QVector& v_minus, const QVector& v_plus, const LinearForm& l);

/// Indices of the processed forms vanishing on both a and b.
std::vector<std::size_t> common_tight_set(const QVector& a, const QVector& b, std::span<const LinearForm> processed);

bool adjacent_combinatorial(const QVector& v_minus,
                            const QVector& v_plus,
                            std::span<const QVector> rays,
                            std::span<const LinearForm> processed);

bool adjacent_rank(const QVector& v_minus,
                   const QVector& v_plus,
                   std::span<const LinearForm> processed,
                   std::size_t r);

struct StepResult
{
    ConeDescription cone;
    EvalTableau tableau;  ///< covers processed + {l}
};

/**
 * Extends `cone`, valid for the `processed` forms, by the inequality l(x) <= 0.
 *
 * `tableau` must hold the values of `processed` on `cone.rays` in order. The
 * caller appends l to its processed list afterwards.
 */
StepResult mb_step(const ConeDescription& cone,
                   std::span<const LinearForm> processed,
                   const LinearForm& l,
                   const EvalTableau& tableau,
                   const StepOptions& options = {});

}  // namespace conehull
