#include <doctest.h>

#include "hallinv/linalg.hpp"

using namespace hallinv;

TEST_SUITE("linalg") {

TEST_CASE("smith normal form of a classic example")
{
    IntMatrix a = IntMatrix::from_rows({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
    SmithForm s = smith_normal_form(a, true);
    REQUIRE(s.divisors.size() == 3);
    CHECK(s.divisors[0] == 2);
    CHECK(s.divisors[1] == 6);
    CHECK(s.divisors[2] == 12);
    CHECK(s.rank == 3);
    CHECK(s.coker_free_rank == 0);
    IntMatrix d = (*s.U) * a * (*s.V);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) CHECK(d(i, j) == (i == j ? s.divisors[i] : BigInt(0)));
    CHECK((*s.V) * (*s.V_inverse) == IntMatrix::identity(3));
}

TEST_CASE("rank deficient and rectangular")
{
    IntMatrix a = IntMatrix::from_rows({{1, 2, 3}, {2, 4, 6}});
    SmithForm s = smith_normal_form(a);
    CHECK(s.rank == 1);
    CHECK(s.coker_free_rank == 2);
    CHECK(s.torsion().empty());

    IntMatrix z(0, 3);
    CHECK(smith_normal_form(z).coker_free_rank == 3);
}

TEST_CASE("torsion of cyclic relations")
{
    SmithForm s = smith_normal_form(IntMatrix::from_rows({{4, 6}}));
    REQUIRE(s.torsion().size() == 1);
    CHECK(s.torsion()[0] == 2);
    CHECK(s.coker_free_rank == 1);
}

TEST_CASE("determinant")
{
    CHECK(determinant(IntMatrix::from_rows({{2, 1}, {7, 4}})) == 1);
    CHECK(determinant(IntMatrix::from_rows({{1, 2, 3}, {4, 5, 6}, {7, 8, 10}})) == -3);
    CHECK(determinant(IntMatrix::identity(5)) == 1);
}

TEST_CASE("matrix ops")
{
    IntMatrix a = IntMatrix::from_rows({{1, 2}, {3, 4}});
    CHECK(a.transpose()(0, 1) == 3);
    a.add_row(1, 0, -3);
    CHECK(a(1, 1) == -2);
    a.swap_cols(0, 1);
    CHECK(a(0, 0) == 2);
}

TEST_CASE("rank over fields")
{
    IntMatrix a = IntMatrix::from_rows({{1, 1}, {1, -1}});
    auto F2 = Field::prime(2), F3 = Field::prime(3), Q = Field::rationals();
    CHECK(rank_over_field(to_field(a, F2), F2) == 1);
    CHECK(rank_over_field(to_field(a, F3), F3) == 2);
    CHECK(rank_over_field(to_field(a, Q), Q) == 2);
    CHECK(corank_over_field(to_field(a, F2), F2) == 1);
}

}
