#include <doctest.h>

#include "hallinv/charvar.hpp"
#include "hallinv/error.hpp"
#include "hallinv/field.hpp"

using namespace hallinv;

TEST_SUITE("fields") {

TEST_CASE("prime field arithmetic")
{
    auto K = Field::prime(7);
    auto a = K->from_int(3), b = K->from_int(5);
    CHECK((a + b) == K->from_int(1));
    CHECK((a * b) == K->from_int(1));
    CHECK(a.inv() == b);
    CHECK((a - b) == K->from_int(5));
    CHECK(K->from_int(-1) == K->from_int(6));
    CHECK(K->size() == 7);
}

TEST_CASE("F4 contains a primitive cube root")
{
    auto K = sufficiently_large_field(3, 2);
    CHECK(K->size() == 4);
    auto w = primitive_root_of_unity(K, 3);
    CHECK(element_order(w) == 3);
}

TEST_CASE("extension field rejects reducible modulus")
{
    CHECK_THROWS_AS(Field::extension(2, {1, 0, 1}), InputError);
    auto K = Field::extension(2, {1, 1, 1});
    auto x = K->generator_x();
    CHECK((x * x + x + K->one()).is_zero());
    CHECK(x.pow(3).is_one());
}

TEST_CASE("cyclotomic fields")
{
    auto K = Field::cyclotomic(3);
    auto z = primitive_root_of_unity(K, 3);
    CHECK((z * z + z + K->one()).is_zero());
    CHECK(z.pow(3).is_one());
    CHECK_FALSE(z.is_one());
    auto Q = Field::rationals();
    CHECK((Q->from_int(2).inv() * Q->from_int(4)) == Q->from_int(2));
}

TEST_CASE("multiplicative order and cyclotomic factorisation")
{
    CHECK(multiplicative_order(2, 7) == 3);
    CHECK(multiplicative_order(2, 3) == 2);
    CHECK(multiplicative_order(3, 2) == 1);
    CHECK(factor_cyclotomic_mod_q(3, 2) == std::vector<std::vector<long>>{{1, 1, 1}});
    auto f = factor_cyclotomic_mod_q(7, 2);
    REQUIRE(f.size() == 2);
    CHECK(f[0].size() == 4);
    CHECK(is_irreducible_mod_q(f[0], 2));
    CHECK(factor_cyclotomic_mod_q(3, 7).size() == 2);
    CHECK(cyclotomic_polynomial(6) == std::vector<long>{1, -1, 1});
    CHECK(smallest_irreducible(2, 2) == std::vector<long>{1, 1, 1});
}

TEST_CASE("multiplicative generator has full order")
{
    for (long q : {2L, 3L, 5L, 7L}) {
        auto K = sufficiently_large_field(7, q == 7 ? 2 : q);
        auto g = K->multiplicative_generator();
        long n = static_cast<long>(K->size()) - 1;
        CHECK(g.pow(n).is_one());
        for (long d = 1; d < n; ++d)
            if (n % d == 0) CHECK_FALSE(g.pow(d).is_one());
    }
}

TEST_CASE("division by zero is rejected")
{
    auto K = Field::prime(5);
    CHECK_THROWS(K->zero().inv());
}

}
