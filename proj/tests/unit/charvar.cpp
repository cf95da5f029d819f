#include <doctest.h>

#include "hallinv/braids.hpp"
#include "hallinv/charvar.hpp"
#include "hallinv/error.hpp"

using namespace hallinv;

TEST_SUITE("charvar") {

TEST_CASE("free groups jump everywhere")
{
    for (long n = 2; n <= 4; ++n) {
        auto b = beta_distribution(groups::free(static_cast<int>(n)), 2, 0);
        CHECK(b.n_p == static_cast<std::size_t>(n));
        CHECK(b.at(n - 1) == (BigInt(1) << 0) * ((BigInt(1) << n) - 1));
        CHECK(b.max_depth() == n - 1);
    }
}

TEST_CASE("free abelian groups never jump")
{
    auto b = beta_distribution(groups::free_abelian(3), 3, 2);
    CHECK(b.at(0) == 13);
    CHECK(b.total() == 13);
    CHECK(b.max_depth() == 0);
}

TEST_CASE("torsion changes eligible characters")
{
    Presentation p = groups::nonorientable_surface(2);
    auto b2 = beta_distribution(p, 2, 3);
    CHECK(b2.n_p == 2);
    CHECK(b2.total() == 3);
    auto b3 = beta_distribution(p, 3, 2);
    CHECK(b3.n_p == 1);
    CHECK(b3.total() == 1);
}

TEST_CASE("characters validate torsion coordinates")
{
    AbelStructure a = abelianization(groups::nonorientable_surface(2));
    auto K = sufficiently_large_field(3, 2);
    auto w = primitive_root_of_unity(K, 3);
    CHECK_THROWS_AS(make_character(a, K, {K->one()}, {w}), InputError);
    CHECK_THROWS_AS(make_character(a, K, {K->zero()}, {K->one()}), InputError);
    Character t = make_character(a, K, {w}, {K->one()});
    CHECK(t.order() == 3);
    CHECK_FALSE(t.is_trivial());
    CHECK(trivial_character(a, K).is_trivial());
}

TEST_CASE("depth of the braid arrangement at a local character")
{
    Presentation p = fixture("braid_arrangement");
    AlexanderMatrix a = alexander_matrix(p);
    auto exps = order_p_exponents(a.abel, 2);
    CHECK(exps.size() == 63);
    auto d = order_p_depths(a, 2, 0);
    long ones = 0;
    for (long v : d) {
        CHECK(v <= 1);
        ones += v;
    }
    CHECK(ones == 15);
}

TEST_CASE("root evaluator agrees with direct evaluation")
{
    Presentation p = fixture("A2134");
    AlexanderMatrix a = alexander_matrix(p);
    auto K = sufficiently_large_field(3, 2);
    RootEvaluator ev(a, K, 3);
    for (const auto& e : order_p_exponents(a.abel, 3)) CHECK(ev.depth(e) == depth(a, ev.character(e)));
}

TEST_CASE("cover Betti numbers of free groups")
{
    CHECK(b1_cover_cyclic(groups::free(2), {1, 0}, 2, 0) == 3);
    CHECK(b1_cover_cyclic(groups::free(2), {1, 1}, 3, 0) == 4);
    CHECK(b1_cover_cyclic(groups::free_abelian(2), {1, 0}, 5, 0) == 2);
    CHECK(b1_cover_abelian(groups::free(2), {{1, 0}, {0, 1}}, {2, 2}, 0) == 5);
}

TEST_CASE("bounds and congruences")
{
    CoverBounds c{2, 3, 2, 2, std::nullopt};
    BoundsReport r = check_bounds_congruence(c);
    CHECK(r.ok);
    CoverBounds bad{2, 100, 2, 2, std::nullopt};
    CHECK_THROWS_AS(check_bounds_congruence(bad), InvariantError);
}

TEST_CASE("invalid parameters")
{
    CHECK_THROWS_AS(beta_distribution(groups::free(2), 4, 0), InputError);
    CHECK_THROWS_AS(beta_distribution(groups::free(2), 3, 3), InputError);
}

}
