#include "test_util.hpp"

#include "ptower/gsineq.hpp"

using namespace ptower;
using namespace ptower::gsineq;

namespace {

ZassenhausPolynomial poly(unsigned d, std::map<unsigned, BigInt> levels) { return {d, std::move(levels)}; }

Rational q(long n, long d)
{
    Rational r(n, d);
    r.canonicalize();
    return r;
}

bool grid_positive(ZassenhausPolynomial const & z)
{
    for (long n = 1; n < 1000; ++n)
        if (sgn(evaluate(z, q(n, 1000))) <= 0)
            return false;
    return true;
}

} // namespace

TEST_SUITE("gsineq")
{
    TEST_CASE("exact evaluation")
    {
        CHECK(evaluate(poly(2, {{5, 2}}), q(2, 3)) == q(-17, 243));
        CHECK(evaluate(poly(2, {{3, 1}, {7, 1}}), Rational(0)) == 1);
        /* t^2 - t + 1 at 1 is 1; the square (t - 1)^2 needs d = 2 */
        CHECK(evaluate(poly(1, {{2, 1}}), Rational(1)) == 1);
        CHECK(evaluate(poly(2, {{2, 1}}), Rational(1)) == 0);
        CHECK(poly(2, {{3, 1}, {9, 1}}).coefficients() ==
              std::vector<BigInt>{1, -2, 0, 1, 0, 0, 0, 0, 0, 1});
        CHECK_ERROR_KIND(poly(2, {{1, 1}}), ErrorKind::InvalidArgument);
        CHECK_ERROR_KIND(poly(2, {{3, -1}}), ErrorKind::InvalidArgument);
    }

    TEST_CASE("Sturm root counting")
    {
        /* (t - 1/2)(t - 1/3) = t^2 - 5/6 t + 1/6 */
        Poly p{q(1, 6), q(-5, 6), Rational(1)};
        CHECK(count_roots(p, Rational(0), Rational(1)) == 2);
        CHECK(count_roots(p, Rational(0), q(2, 5)) == 1);
        CHECK(count_roots(p, q(1, 2), Rational(1)) == 0);
        /* t^2 + 1 */
        CHECK(count_roots(Poly{Rational(1), Rational(0), Rational(1)}, Rational(-10), Rational(10)) == 0);
    }

    TEST_CASE("boundary of the two-relation inequality")
    {
        for (unsigned a = 3; a <= 15; a += 2) {
            CAPTURE(a);
            CHECK(gs_contradiction(two_relation_polynomial(3, a)).has_nonpositive_point == (a >= 9));
        }
        for (unsigned b = 5; b <= 15; b += 2) {
            CAPTURE(b);
            CHECK(gs_contradiction(two_relation_polynomial(5, b)).has_nonpositive_point);
        }
        CHECK_FALSE(gs_contradiction(poly(2, {{3, 1}, {7, 1}})).has_nonpositive_point);
    }

    TEST_CASE("witnesses certify the contradiction")
    {
        auto r = gs_contradiction(poly(2, {{5, 2}}));
        REQUIRE(r.has_nonpositive_point);
        REQUIRE(r.witness.has_value());
        CHECK(*r.witness == q(2, 3));
        CHECK(*r.value == q(-17, 243));

        for (unsigned i = 3; i <= 15; i += 2)
            for (unsigned j = i; j <= 15; j += 2) {
                auto z = two_relation_polynomial(i, j);
                auto rep = gs_contradiction(z);
                if (!rep.has_nonpositive_point)
                    continue;
                REQUIRE(rep.witness.has_value());
                CHECK(*rep.witness > 0);
                CHECK(*rep.witness < 1);
                CHECK(sgn(evaluate(z, *rep.witness)) <= 0);
                CHECK(rep.witness->get_den() <= 65536);
            }
    }

    TEST_CASE("tangency and roots at the endpoint")
    {
        /* (1 - 2t)^2 touches zero at 1/2 only */
        auto touch = gs_contradiction(poly(4, {{2, 4}}));
        CHECK(touch.has_nonpositive_point);
        REQUIRE(touch.witness.has_value());
        CHECK(*touch.witness == q(1, 2));
        CHECK(*touch.value == 0);
        /* (1 - 3t)^2 */
        auto third = gs_contradiction(poly(6, {{2, 9}}));
        REQUIRE(third.witness.has_value());
        CHECK(*third.witness == q(1, 3));
        /* (1 - t)^2: the only root is t = 1, outside the open interval */
        CHECK_FALSE(gs_contradiction(poly(2, {{2, 1}})).has_nonpositive_point);
        CHECK_FALSE(gs_contradiction(poly(1, {{2, 1}})).has_nonpositive_point);
        /* t^3 - 2t + 1 = (t - 1)(t^2 + t - 1) has the root (sqrt 5 - 1)/2 inside */
        auto golden = gs_contradiction(poly(2, {{3, 1}}));
        CHECK(golden.has_nonpositive_point);
        REQUIRE(golden.witness.has_value());
        CHECK(sgn(*golden.value) <= 0);
    }

    TEST_CASE("sampling agrees with the exact decision")
    {
        auto types = admissible_types(2, 15);
        for (auto const & t : types.types)
            CHECK(grid_positive(two_relation_polynomial(t.i, t.j)));
        for (unsigned d = 1; d <= 4; ++d)
            for (unsigned r = 0; r <= 6; ++r)
                for (unsigned k = 2; k <= 6; ++k) {
                    auto z = poly(d, {{k, BigInt(r)}});
                    if (grid_positive(z) == false)
                        CHECK(gs_contradiction(z).has_nonpositive_point);
                }
    }

    TEST_CASE("moving a relation to a less deep level keeps positivity")
    {
        /* t^(k+1) <= t^k on (0,1): a contradiction at level k persists at level k + 1 */
        for (unsigned d = 2; d <= 3; ++d)
            for (unsigned k = 3; k <= 13; ++k)
                for (unsigned other = 2; other <= 9; ++other) {
                    auto at = [&](unsigned level) {
                        std::map<unsigned, BigInt> levels;
                        levels[level] += 1;
                        levels[other] += 1;
                        return gs_contradiction(poly(d, levels)).has_nonpositive_point;
                    };
                    if (at(k))
                        CHECK(at(k + 1));
                }
    }

    TEST_CASE("medium-strength bound")
    {
        CHECK(medium_bound(2, 2) == 1);
        CHECK(medium_bound(3, 3) == 4);
        CHECK(medium_bound(1, 2) == q(1, 4));
        CHECK(medium_bound(2, 3) == q(32, 27));
        CHECK(medium_contradiction(3, BigInt(3), 3));
        CHECK_FALSE(medium_contradiction(2, BigInt(2), 2));
        CHECK_FALSE(medium_contradiction(2, BigInt(2), 3));
        CHECK_ERROR_KIND(medium_bound(2, 1), ErrorKind::InvalidArgument);
        /*
         * For m = 2 the bound is the discriminant condition of r t^2 - d t + 1.
         * The two disagree only when the minimizer d / 2r is not inside (0,1)
         * and the polynomial vanishes at t = 1: (d, r) = (1, 0) and (2, 1).
         */
        for (unsigned d = 1; d <= 8; ++d)
            for (unsigned r = 0; r <= 20; ++r) {
                CAPTURE(d);
                CAPTURE(r);
                bool bound = medium_contradiction(d, BigInt(r), 2);
                bool full = gs_contradiction(poly(d, {{2, BigInt(r)}})).has_nonpositive_point;
                bool edge = (d == 1 && r == 0) || (d == 2 && r == 1);
                CHECK(bound == (edge ? !full : full));
                if (2 * r > d)
                    CHECK(bound == full);
            }
    }

    TEST_CASE("admissible types")
    {
        auto all = admissible_types(2, 15);
        CHECK(all.types == std::vector<ZassenhausType>{{3, 3}, {3, 5}, {3, 7}});
        CHECK(all.complete);
        auto small = admissible_types(2, 5);
        CHECK(small.types == std::vector<ZassenhausType>{{3, 3}, {3, 5}});
        CHECK_FALSE(small.complete);
        auto seven = admissible_types(2, 7);
        CHECK(seven.types == all.types);
        CHECK(seven.complete);
        CHECK_ERROR_KIND(admissible_types(3, 15), ErrorKind::RankUnsupported);
        CHECK_ERROR_KIND(admissible_types(2, 2), ErrorKind::InvalidArgument);
    }
}
