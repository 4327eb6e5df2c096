#include <random>

#include <doctest.h>

#include "conehull/reduce.hpp"
#include "conehull/solver.hpp"
#include "conehull/verify.hpp"
#include "support.hpp"

using namespace conehull;
using namespace conehull::testing;

TEST_CASE("strip_unused_variables")
{
    auto stripped = strip_unused_variables(system_of(3, {{-1, 0, 0}, {0, -1, 0}}));
    CHECK(stripped.system == system_of(2, {{-1, 0}, {0, -1}}));
    CHECK(stripped.bad_indices == std::vector<std::size_t>{2});

    stripped = strip_unused_variables(system_of(1, {{-1}}));
    CHECK(stripped.system == system_of(1, {{-1}}));
    CHECK(stripped.bad_indices.empty());

    stripped = strip_unused_variables(system_of(1, {{0}}));
    CHECK(stripped.system.dimension() == 0);
    CHECK(stripped.system.size() == 1);
    CHECK(stripped.bad_indices == std::vector<std::size_t>{0});

    stripped = strip_unused_variables(system_of(3, {{0, 2, 0}, {0, 0, 1}}));
    CHECK(stripped.system == system_of(2, {{2, 0}, {0, 1}}));
    CHECK(stripped.bad_indices == std::vector<std::size_t>{0});
}

TEST_CASE("change_of_variables")
{
    auto reduced = change_of_variables(system_of(2, {{-1, 0}, {0, -1}, {1, -1}}));
    CHECK(reduced.system == system_of(2, {{1, -1}}));
    CHECK(reduced.substitution.y_coefficients == ivecs({{1, 0}, {0, 1}}));
    CHECK(reduced.base_indices == std::vector<std::size_t>{0, 1});

    reduced = change_of_variables(system_of(2, {{-1, 0}, {0, -1}}));
    CHECK(reduced.system.size() == 0);
    CHECK(reduced.system.dimension() == 2);

    reduced = change_of_variables(system_of(2, {{1, 1}}));
    CHECK(reduced.system.size() == 0);
    CHECK(reduced.substitution.pivot_indices == std::vector<std::size_t>{0});
    CHECK(reduced.substitution.free_indices == std::vector<std::size_t>{1});
    CHECK(reduced.substitution.y_coefficients == ivecs({{-1}}));
    CHECK(reduced.substitution.free_coefficients == ivecs({{-1}}));

    CHECK_THROWS_AS(change_of_variables(system_of(2, {{0, 0}})), PreconditionError);
}

TEST_CASE("back_substitute")
{
    SUBCASE("identity substitution")
    {
        auto sub = change_of_variables(system_of(2, {{-1, 0}, {0, -1}})).substitution;
        auto cone = back_substitute(cone_of(2, {}, {{1, 0}, {0, 1}}), sub, {}, 2);
        CHECK(cone == cone_of(2, {}, {{0, 1}, {1, 0}}));
    }
    SUBCASE("free variable spans the lineality space")
    {
        auto sub = change_of_variables(system_of(2, {{1, 1}})).substitution;
        auto cone = back_substitute(cone_of(1, {}, {{1}}), sub, {}, 2);
        CHECK(cone.lineality == ivecs({{1, -1}}));
        CHECK(cone.rays == ivecs({{-1, 0}}));
    }
    SUBCASE("unused variable adds a unit lineality vector")
    {
        auto sub = change_of_variables(system_of(2, {{-1, 0}, {0, -1}})).substitution;
        auto cone = back_substitute(cone_of(2, {}, {{1, 0}, {0, 1}}), sub, {2}, 3);
        CHECK(cone.lineality == ivecs({{0, 0, 1}}));
        CHECK(cone.rays == ivecs({{0, 1, 0}, {1, 0, 0}}));
    }
    SUBCASE("dimension mismatch")
    {
        auto sub = change_of_variables(system_of(2, {{-1, 0}, {0, -1}})).substitution;
        CHECK_THROWS_AS(back_substitute(cone_of(1, {}, {{1}}), sub, {}, 2), DimensionError);
        CHECK_THROWS_AS(back_substitute(cone_of(2, {}, {}), sub, {}, 3), DimensionError);
    }
}

TEST_CASE("reduced forms never depend on free variables")
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; ++trial)
    {
        const auto n = static_cast<std::size_t>(uniform_int(rng, 2, 6));
        const auto m = static_cast<std::size_t>(uniform_int(rng, 2, 8));
        const auto r = static_cast<std::size_t>(uniform_int(rng, 1, static_cast<std::int64_t>(std::min(n, m))));
        const auto sys = random_system(n, m, r, 3, rng());
        const auto reduced = change_of_variables(sys);
        CHECK(reduced.system.size() == m - r);
        CHECK(reduced.system.dimension() == r);
        CHECK(reduced.substitution.free_indices.size() == n - r);
    }
}

TEST_CASE("preprocessed and direct paths agree")
{
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 100; ++trial)
    {
        const auto n = static_cast<std::size_t>(uniform_int(rng, 1, 6));
        const auto m = static_cast<std::size_t>(uniform_int(rng, 1, 8));
        auto sys = random_dense_system(n, m, 3, rng());
        if (trial % 4 == 0)
            sys = with_unused_variables(sys, 1, rng());

        const auto reduced = conehull::conehull(sys, false);
        const auto direct = conehull::conehull(sys, true);
        CHECK(cones_equal(direct, reduced, sys));
        CHECK(reduced.lineality.size() == sys.dimension() - rank(sys.forms()));
        for (const auto& u : reduced.lineality)
            for (const auto& f : sys.forms())
                CHECK(evaluate(f, u) == 0);
        for (const auto& v : reduced.rays)
            for (const auto& f : sys.forms())
                CHECK(sgn(evaluate(f, v)) <= 0);
    }
}
