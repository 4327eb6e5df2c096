#include "conehull/exact_arith.hpp"

#include <algorithm>
#include <string>

#include "conehull/substitution.hpp"

namespace conehull {

bool LinearForm::is_zero() const
{
    return conehull::is_zero(coefficients);
}

InequalitySystem::InequalitySystem(std::size_t dimension, std::vector<LinearForm> forms)
    : dimension_(dimension)
{
    forms_.reserve(forms.size());
    for (auto& f : forms)
        add(std::move(f));
}

void InequalitySystem::add(LinearForm form)
{
    require_dimension(form.coefficients, dimension_, "form");
    forms_.push_back(std::move(form));
}

std::vector<QVector> InequalitySystem::rows() const
{
    std::vector<QVector> out;
    out.reserve(forms_.size());
    for (const auto& f : forms_)
        out.push_back(f.coefficients);
    return out;
}

void require_dimension(const QVector& v, std::size_t n, const char* what)
{
    if (v.size() != n)
        throw DimensionError(std::string(what) + " has length " + std::to_string(v.size()) +
                             ", expected " + std::to_string(n));
}

Rational dot(const QVector& a, const QVector& b)
{
    require_dimension(b, a.size(), "vector");
    Rational sum = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
    {
        if (sgn(a[i]) != 0 && sgn(b[i]) != 0)
            sum += a[i] * b[i];
    }
    return sum;
}

Rational evaluate(const LinearForm& form, const QVector& x)
{
    return dot(form.coefficients, x);
}

QVector linear_combination(const Rational& a, const QVector& x, const Rational& b, const QVector& y)
{
    require_dimension(y, x.size(), "vector");
    QVector out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        out[i] = a * x[i] + b * y[i];
    return out;
}

QVector negated(QVector v)
{
    for (auto& e : v)
        e = -e;
    return v;
}

QVector unit_vector(std::size_t n, std::size_t i)
{
    QVector e(n, Rational(0));
    e.at(i) = 1;
    return e;
}

std::vector<QVector> standard_basis(std::size_t n)
{
    std::vector<QVector> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        out.push_back(unit_vector(n, i));
    return out;
}

bool is_zero(const QVector& v)
{
    return std::all_of(v.begin(), v.end(), [](const Rational& e) { return sgn(e) == 0; });
}

// -- EchelonBasis ------------------------------------------------------------

QVector EchelonBasis::reduce(QVector v) const
{
    require_dimension(v, dimension_, "row");
    for (std::size_t k = 0; k < rows_.size(); ++k)
    {
        const std::size_t p = pivots_[k];
        if (sgn(v[p]) == 0)
            continue;
        const Rational factor = v[p];
        const QVector& row = rows_[k];
        for (std::size_t i = 0; i < dimension_; ++i)
        {
            if (sgn(row[i]) != 0)
                v[i] -= factor * row[i];
        }
    }
    return v;
}

bool EchelonBasis::insert(const QVector& row)
{
    QVector r = reduce(row);
    auto it = std::find_if(r.begin(), r.end(), [](const Rational& e) { return sgn(e) != 0; });
    if (it == r.end())
        return false;
    const std::size_t p = static_cast<std::size_t>(it - r.begin());
    const Rational inv = 1 / r[p];
    for (auto& e : r)
        e *= inv;
    for (auto& other : rows_)
    {
        if (sgn(other[p]) == 0)
            continue;
        const Rational factor = other[p];
        for (std::size_t i = 0; i < dimension_; ++i)
        {
            if (sgn(r[i]) != 0)
                other[i] -= factor * r[i];
        }
    }
    rows_.push_back(std::move(r));
    pivots_.push_back(p);
    return true;
}

std::vector<std::size_t> EchelonBasis::pivots() const
{
    std::vector<std::size_t> p = pivots_;
    std::sort(p.begin(), p.end());
    return p;
}

std::vector<QVector> EchelonBasis::rows() const
{
    std::vector<std::size_t> order(rows_.size());
    for (std::size_t k = 0; k < order.size(); ++k)
        order[k] = k;
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return pivots_[a] < pivots_[b]; });
    std::vector<QVector> out;
    out.reserve(order.size());
    for (auto k : order)
        out.push_back(rows_[k]);
    return out;
}

// -- rank and friends ---------------------------------------------------------

std::size_t rank(std::span<const QVector> rows)
{
    if (rows.empty())
        return 0;
    EchelonBasis basis(rows.front().size());
    for (const auto& r : rows)
        basis.insert(r);
    return basis.rank();
}

std::size_t rank(std::span<const LinearForm> forms)
{
    return max_independent_subset(forms).size();
}

std::vector<std::size_t> max_independent_subset(std::span<const LinearForm> forms)
{
    std::vector<std::size_t> chosen;
    if (forms.empty())
        return chosen;
    EchelonBasis basis(forms.front().dimension());
    for (std::size_t j = 0; j < forms.size(); ++j)
    {
        if (basis.insert(forms[j].coefficients))
            chosen.push_back(j);
    }
    return chosen;
}

std::vector<QVector> null_space(std::span<const QVector> rows, std::size_t n)
{
    EchelonBasis basis(n);
    for (const auto& r : rows)
        basis.insert(r);

    const auto echelon = basis.rows();
    const auto pivots = basis.pivots();
    std::vector<bool> is_pivot(n, false);
    for (auto p : pivots)
        is_pivot[p] = true;

    std::vector<QVector> out;
    for (std::size_t f = 0; f < n; ++f)
    {
        if (is_pivot[f])
            continue;
        QVector x(n, Rational(0));
        x[f] = 1;
        for (std::size_t k = 0; k < echelon.size(); ++k)
            x[pivots[k]] = -echelon[k][f];
        out.push_back(canonicalize_line(x));
    }
    std::sort(out.begin(), out.end());
    return out;
}

QVector canonicalize_ray(const QVector& v)
{
    if (is_zero(v))
        throw PreconditionError("cannot canonicalize the zero vector");

    mpz_class denominator_lcm = 1;
    for (const auto& e : v)
        mpz_lcm(denominator_lcm.get_mpz_t(), denominator_lcm.get_mpz_t(), e.get_den_mpz_t());

    std::vector<mpz_class> scaled(v.size());
    mpz_class numerator_gcd = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
    {
        scaled[i] = v[i].get_num() * (denominator_lcm / v[i].get_den());
        mpz_gcd(numerator_gcd.get_mpz_t(), numerator_gcd.get_mpz_t(), scaled[i].get_mpz_t());
    }

    QVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out[i] = Rational(mpz_class(scaled[i] / numerator_gcd));
    return out;
}

QVector canonicalize_line(const QVector& u)
{
    QVector out = canonicalize_ray(u);
    auto it = std::find_if(out.begin(), out.end(), [](const Rational& e) { return sgn(e) != 0; });
    if (sgn(*it) < 0)
        out = negated(std::move(out));
    return out;
}

// -- substitution -------------------------------------------------------------

Substitution solve_for_substitution(std::span<const LinearForm> base_forms, std::size_t n)
{
    const std::size_t r = base_forms.size();
    if (r > n)
        throw PreconditionError("more base forms than variables");

    // Augmented rows [ a_j | e_j ]: a_j . x + y_j = 0.
    std::vector<QVector> rows(r, QVector(n + r, Rational(0)));
    for (std::size_t j = 0; j < r; ++j)
    {
        require_dimension(base_forms[j].coefficients, n, "base form");
        for (std::size_t i = 0; i < n; ++i)
            rows[j][i] = base_forms[j].coefficients[i];
        rows[j][n + j] = 1;
    }

    // Gauss-Jordan on the x block; row k gets its pivot on the first column
    // that is nonzero among the remaining rows.
    std::vector<std::size_t> pivot_of_row;
    std::size_t next = 0;
    for (std::size_t col = 0; col < n && next < r; ++col)
    {
        std::size_t sel = next;
        while (sel < r && sgn(rows[sel][col]) == 0)
            ++sel;
        if (sel == r)
            continue;
        std::swap(rows[sel], rows[next]);
        const Rational inv = 1 / rows[next][col];
        for (auto& e : rows[next])
            e *= inv;
        for (std::size_t k = 0; k < r; ++k)
        {
            if (k == next || sgn(rows[k][col]) == 0)
                continue;
            const Rational factor = rows[k][col];
            for (std::size_t i = 0; i < n + r; ++i)
            {
                if (sgn(rows[next][i]) != 0)
                    rows[k][i] -= factor * rows[next][i];
            }
        }
        pivot_of_row.push_back(col);
        ++next;
    }
    if (next < r)
        throw PreconditionError("base forms are linearly dependent");

    Substitution sub;
    sub.dimension = n;
    sub.rank = r;
    sub.pivot_indices = pivot_of_row;
    std::vector<bool> is_pivot(n, false);
    for (auto p : pivot_of_row)
        is_pivot[p] = true;
    for (std::size_t i = 0; i < n; ++i)
    {
        if (!is_pivot[i])
            sub.free_indices.push_back(i);
    }

    // Row k reads x_p + sum_f R[k][f] x_f + sum_j T[k][j] y_j = 0.
    for (std::size_t k = 0; k < r; ++k)
    {
        QVector yc(r), fc(sub.free_indices.size());
        for (std::size_t j = 0; j < r; ++j)
            yc[j] = -rows[k][n + j];
        for (std::size_t f = 0; f < sub.free_indices.size(); ++f)
            fc[f] = -rows[k][sub.free_indices[f]];
        sub.y_coefficients.push_back(std::move(yc));
        sub.free_coefficients.push_back(std::move(fc));
    }
    return sub;
}

QVector Substitution::apply(const QVector& y, const QVector& free_values) const
{
    require_dimension(y, rank, "y");
    require_dimension(free_values, free_indices.size(), "free assignment");
    QVector x(dimension, Rational(0));
    for (std::size_t f = 0; f < free_indices.size(); ++f)
        x[free_indices[f]] = free_values[f];
    for (std::size_t k = 0; k < rank; ++k)
        x[pivot_indices[k]] = dot(y_coefficients[k], y) + dot(free_coefficients[k], free_values);
    return x;
}

std::pair<QVector, QVector> Substitution::substitute(const LinearForm& form) const
{
    require_dimension(form.coefficients, dimension, "form");
    QVector on_y(rank, Rational(0));
    QVector on_free(free_indices.size(), Rational(0));
    for (std::size_t f = 0; f < free_indices.size(); ++f)
        on_free[f] = form.coefficients[free_indices[f]];
    for (std::size_t k = 0; k < rank; ++k)
    {
        const Rational& a = form.coefficients[pivot_indices[k]];
        if (sgn(a) == 0)
            continue;
        for (std::size_t j = 0; j < rank; ++j)
            on_y[j] += a * y_coefficients[k][j];
        for (std::size_t f = 0; f < free_indices.size(); ++f)
            on_free[f] += a * free_coefficients[k][f];
    }
    return {std::move(on_y), std::move(on_free)};
}

}  // namespace conehull
