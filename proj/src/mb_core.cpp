#include "conehull/mb_core.hpp"

#include <algorithm>
#include <utility>

namespace conehull {

namespace {

void check_deadline(const StepOptions& options)
{
    if (options.deadline && std::chrono::steady_clock::now() > *options.deadline)
        throw TimeoutError("solve exceeded its deadline");
}

boost::dynamic_bitset<> zeros_of(const std::vector<Rational>& column)
{
    boost::dynamic_bitset<> z(column.size());
    for (std::size_t j = 0; j < column.size(); ++j)
        z[j] = sgn(column[j]) == 0;
    return z;
}

// True when no ray other than i and j is tight on all of `common`.
bool no_third_ray(const boost::dynamic_bitset<>& common,
                  std::size_t i,
                  std::size_t j,
                  const EvalTableau& tableau)
{
    for (std::size_t k = 0; k < tableau.ray_count(); ++k)
    {
        if (k == i || k == j)
            continue;
        if (common.is_subset_of(tableau.zero_set(k)))
            return false;
    }
    return true;
}

std::size_t rank_of_subset(const boost::dynamic_bitset<>& subset, std::span<const LinearForm> processed)
{
    if (processed.empty())
        return 0;
    EchelonBasis basis(processed.front().dimension());
    for (auto j = subset.find_first(); j != boost::dynamic_bitset<>::npos; j = subset.find_next(j))
        basis.insert(processed[j].coefficients);
    return basis.rank();
}

}  // namespace

void ConeDescription::normalize()
{
    for (auto& u : lineality)
        u = canonicalize_line(u);
    for (auto& v : rays)
        v = canonicalize_ray(v);
    std::sort(lineality.begin(), lineality.end());
    std::sort(rays.begin(), rays.end());
    rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
}

ConeDescription full_space(std::size_t n)
{
    ConeDescription c;
    c.dimension = n;
    c.lineality = standard_basis(n);
    std::sort(c.lineality.begin(), c.lineality.end());
    return c;
}

// -- EvalTableau ---------------------------------------------------------------

EvalTableau EvalTableau::build(std::span<const LinearForm> processed, std::span<const QVector> rays)
{
    EvalTableau t(processed.size());
    t.columns_.reserve(rays.size());
    t.zeros_.reserve(rays.size());
    for (const auto& v : rays)
    {
        std::vector<Rational> column;
        column.reserve(processed.size());
        for (const auto& f : processed)
            column.push_back(evaluate(f, v));
        t.append_ray(std::move(column));
    }
    return t;
}

void EvalTableau::append_ray(std::vector<Rational> column)
{
    if (column.size() != forms_)
        throw DimensionError("tableau column has the wrong number of forms");
    zeros_.push_back(zeros_of(column));
    columns_.push_back(std::move(column));
}

bool EvalTableau::consistent_with(std::span<const LinearForm> processed, std::span<const QVector> rays) const
{
    if (processed.size() != forms_ || rays.size() != columns_.size())
        return false;
    for (std::size_t k = 0; k < rays.size(); ++k)
    {
        for (std::size_t j = 0; j < forms_; ++j)
        {
            if (evaluate(processed[j], rays[k]) != columns_[k][j])
                return false;
        }
    }
    return true;
}

// -- single transforms ---------------------------------------------------------

LinealityTransform transform_lineality(std::span<const QVector> lineality, const LinearForm& l)
{
    std::size_t pivot = lineality.size();
    Rational l_pivot;
    for (std::size_t i = 0; i < lineality.size(); ++i)
    {
        l_pivot = evaluate(l, lineality[i]);
        if (sgn(l_pivot) != 0)
        {
            pivot = i;
            break;
        }
    }
    if (pivot == lineality.size())
        throw PreconditionError("form vanishes on the whole lineality space");

    const QVector& u = lineality[pivot];
    LinealityTransform out;
    for (std::size_t i = 0; i < lineality.size(); ++i)
    {
        if (i == pivot)
            continue;
        const Rational l_i = evaluate(l, lineality[i]);
        out.lineality.push_back(canonicalize_line(linear_combination(l_pivot, lineality[i], -l_i, u)));
    }
    std::sort(out.lineality.begin(), out.lineality.end());
    out.pivot_ray = canonicalize_ray(sgn(l_pivot) > 0 ? negated(u) : u);
    return out;
}

std::vector<QVector> transform_rays(std::span<const QVector> rays, const QVector& pivot_ray, const LinearForm& l)
{
    const Rational l_n = evaluate(l, pivot_ray);
    if (sgn(l_n) >= 0)
        throw PreconditionError("pivot ray must satisfy l(n) < 0");

    std::vector<QVector> out;
    out.reserve(rays.size() + 1);
    out.push_back(canonicalize_ray(pivot_ray));
    for (const auto& v : rays)
    {
        QVector w = linear_combination(-l_n, v, evaluate(l, v), pivot_ray);
        if (!is_zero(w))
            out.push_back(canonicalize_ray(w));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

QVector combine(const QVector& v_minus, const QVector& v_plus, const LinearForm& l)
{
    const Rational a = evaluate(l, v_minus);
    const Rational b = evaluate(l, v_plus);
    if (sgn(a) >= 0 || sgn(b) <= 0)
        throw PreconditionError("combine requires l(v-) < 0 < l(v+)");
    return canonicalize_ray(linear_combination(-a, v_plus, b, v_minus));
}

std::vector<std::size_t> common_tight_set(const QVector& a, const QVector& b, std::span<const LinearForm> processed)
{
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < processed.size(); ++j)
    {
        if (sgn(evaluate(processed[j], a)) == 0 && sgn(evaluate(processed[j], b)) == 0)
            out.push_back(j);
    }
    return out;
}

bool adjacent_combinatorial(const QVector& v_minus,
                            const QVector& v_plus,
                            std::span<const QVector> rays,
                            std::span<const LinearForm> processed)
{
    const auto common = common_tight_set(v_minus, v_plus, processed);
    for (const auto& v : rays)
    {
        if (v == v_minus || v == v_plus)
            continue;
        const bool tight_everywhere = std::all_of(common.begin(), common.end(), [&](std::size_t j) {
            return sgn(evaluate(processed[j], v)) == 0;
        });
        if (tight_everywhere)
            return false;
    }
    return true;
}

bool adjacent_rank(const QVector& v_minus,
                   const QVector& v_plus,
                   std::span<const LinearForm> processed,
                   std::size_t r)
{
    if (r < 2)
        return true;
    std::vector<LinearForm> common;
    for (auto j : common_tight_set(v_minus, v_plus, processed))
        common.push_back(processed[j]);
    return rank(std::span<const LinearForm>(common)) >= r - 2;
}

// -- the step ------------------------------------------------------------------

StepResult mb_step(const ConeDescription& cone,
                   std::span<const LinearForm> processed,
                   const LinearForm& l,
                   const EvalTableau& tableau,
                   const StepOptions& options)
{
    require_dimension(l.coefficients, cone.dimension, "new form");
    for (const auto& f : processed)
        require_dimension(f.coefficients, cone.dimension, "processed form");
    if (tableau.form_count() != processed.size() || tableau.ray_count() != cone.rays.size())
        throw PreconditionError("tableau does not match the processed forms and rays");
    check_deadline(options);

    std::vector<LinearForm> extended(processed.begin(), processed.end());
    extended.push_back(l);

    const bool cuts_lineality = std::any_of(cone.lineality.begin(), cone.lineality.end(),
                                            [&](const QVector& u) { return sgn(evaluate(l, u)) != 0; });
    if (cuts_lineality)
    {
        auto [lineality, pivot_ray] = transform_lineality(cone.lineality, l);
        StepResult out;
        out.cone.dimension = cone.dimension;
        out.cone.lineality = std::move(lineality);
        out.cone.rays = transform_rays(cone.rays, pivot_ray, l);
        out.tableau = EvalTableau::build(extended, out.cone.rays);
        return out;
    }

    const std::size_t p = cone.rays.size();
    std::vector<Rational> l_values(p);
    std::vector<std::size_t> negative, positive;
    for (std::size_t k = 0; k < p; ++k)
    {
        l_values[k] = evaluate(l, cone.rays[k]);
        if (sgn(l_values[k]) < 0)
            negative.push_back(k);
        else if (sgn(l_values[k]) > 0)
            positive.push_back(k);
    }

    std::vector<std::pair<QVector, std::vector<Rational>>> next;
    next.reserve(p);
    for (std::size_t k = 0; k < p; ++k)
    {
        if (sgn(l_values[k]) > 0)
            continue;
        std::vector<Rational> column = tableau.column(k);
        column.push_back(l_values[k]);
        next.emplace_back(cone.rays[k], std::move(column));
    }

    std::size_t processed_rank = 0;
    if (!negative.empty() && !positive.empty())
        processed_rank = rank(processed);

    std::size_t pairs_seen = 0;
    for (auto i : negative)
    {
        for (auto j : positive)
        {
            if ((++pairs_seen & 0xff) == 0)
                check_deadline(options);

            const auto common = tableau.zero_set(i) & tableau.zero_set(j);
            // A 2-face is cut out by at least rank - 2 forms.
            if (common.count() + 2 < processed_rank)
                continue;
            const bool adjacent = options.adjacency == Adjacency::combinatorial
                                      ? no_third_ray(common, i, j, tableau)
                                      : processed_rank < 2 || rank_of_subset(common, processed) + 2 >= processed_rank;
            if (!adjacent)
                continue;

            // w = -l(v-) v+ + l(v+) v-, then scaled to its canonical representative.
            const Rational a = -l_values[i];
            const Rational b = l_values[j];
            const QVector raw = linear_combination(a, cone.rays[j], b, cone.rays[i]);
            QVector w = canonicalize_ray(raw);
            const auto nz = std::find_if(raw.begin(), raw.end(), [](const Rational& e) { return sgn(e) != 0; });
            const std::size_t idx = static_cast<std::size_t>(nz - raw.begin());
            const Rational scale = w[idx] / raw[idx];

            std::vector<Rational> column(processed.size() + 1);
            const auto& col_minus = tableau.column(i);
            const auto& col_plus = tableau.column(j);
            for (std::size_t f = 0; f < processed.size(); ++f)
            {
                if (sgn(col_minus[f]) != 0 || sgn(col_plus[f]) != 0)
                    column[f] = scale * (a * col_plus[f] + b * col_minus[f]);
            }
            column.back() = 0;
            next.emplace_back(std::move(w), std::move(column));
        }
    }

    std::sort(next.begin(), next.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    next.erase(std::unique(next.begin(), next.end(), [](const auto& x, const auto& y) { return x.first == y.first; }),
               next.end());

    StepResult out;
    out.cone.dimension = cone.dimension;
    out.cone.lineality = cone.lineality;
    out.tableau = EvalTableau::build(extended, {});
    out.cone.rays.reserve(next.size());
    for (auto& [ray, column] : next)
    {
        out.cone.rays.push_back(std::move(ray));
        out.tableau.append_ray(std::move(column));
    }
    return out;
}

}  // namespace conehull
