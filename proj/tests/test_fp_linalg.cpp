#include <random>

#include "test_util.hpp"

#include "ptower/bigint.hpp"
#include "ptower/fp_linalg.hpp"

using namespace ptower;
using namespace ptower::fp;

TEST_SUITE("fp_linalg")
{
    TEST_CASE("residues and inverses")
    {
        CHECK(residue(-1, 5) == 4);
        CHECK(residue(12, 5) == 2);
        for (std::uint32_t p : {2u, 3u, 5u, 7u, 101u})
            for (Residue a = 1; a < p; ++a)
                CHECK(mul(a, inverse(a, p), p) == 1);
        CHECK(is_prime(2));
        CHECK(is_prime(7919));
        CHECK_FALSE(is_prime(1));
        CHECK_FALSE(is_prime(91));
    }

    TEST_CASE("subspace echelon form is canonical")
    {
        Subspace a(5, 3), b(5, 3);
        a.insert({1, 2, 3});
        a.insert({0, 1, 4});
        b.insert({1, 3, 2}); /* sum of the two rows above */
        b.insert({0, 2, 3}); /* twice the second */
        CHECK(a == b);
        CHECK(a.dim() == 2);
        CHECK(a.contains(Vec{2, 4, 1}));
        CHECK_FALSE(a.insert({2, 4, 1}));
        CHECK(a.contains(b));
    }

    TEST_CASE("rank and determinant agree on random matrices")
    {
        std::mt19937_64 rng(7);
        for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
            std::uniform_int_distribution<Residue> entry(0, p - 1);
            for (int trial = 0; trial < 200; ++trial) {
                std::vector<Vec> m(3, Vec(3));
                for (auto & row : m)
                    for (auto & x : row)
                        x = entry(rng);
                bool full = rank(m, p) == 3;
                CHECK(full == (determinant(m, p) != 0));
            }
        }
        /* [[2,0],[0,3]] over F_7 */
        CHECK(determinant({{2, 0}, {0, 3}}, 7) == 6);
        CHECK(determinant({{1, 1}, {1, 1}}, 5) == 0);
    }

    TEST_CASE("solve_unique")
    {
        std::vector<Vec> cols{{1, 0, 1}, {0, 1, 1}};
        auto x = solve_unique(cols, {2, 3, 0}, 5);
        REQUIRE(x.has_value());
        CHECK(*x == Vec{2, 3});
        CHECK_FALSE(solve_unique(cols, {1, 0, 0}, 5).has_value());
        CHECK_ERROR_KIND(solve_unique(std::vector<Vec>{{1, 1}, {2, 2}}, {1, 1}, 5), ErrorKind::InternalError);
    }

    TEST_CASE("arbitrary precision parsing")
    {
        CHECK(parse_bigint("-222637549223") == BigInt("-222637549223"));
        CHECK(to_string(parse_bigint("+17")) == "17");
        CHECK_ERROR_KIND(parse_bigint("12a"), ErrorKind::InvalidArgument);
        CHECK_ERROR_KIND(parse_bigint(""), ErrorKind::InvalidArgument);
        CHECK(to_string(parse_rational("4/6")) == "2/3");
        CHECK(to_string(parse_rational("-3")) == "-3/1");
        CHECK(to_string(Rational(0)) == "0/1");
        CHECK_ERROR_KIND(parse_rational("1/0"), ErrorKind::InvalidArgument);
    }
}
