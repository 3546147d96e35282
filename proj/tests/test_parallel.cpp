#include "test_util.hpp"

#include "ptower/builtin_groups.hpp"
#include "ptower/groupcore.hpp"
#include "ptower/magnus.hpp"
#include "ptower/quadforms.hpp"

using namespace ptower;

/* the OpenMP kernels must reproduce their serial references exactly */
TEST_SUITE("parallel")
{
    TEST_CASE("form enumeration and torsion counts")
    {
        for (std::int64_t D : {-23, -3299, -3896, -1155, -19399380}) {
            CAPTURE(D);
            auto serial = quadforms::enumerate_reduced_forms(BigInt(D), Exec::serial);
            auto parallel = quadforms::enumerate_reduced_forms(BigInt(D), Exec::parallel);
            CHECK(serial == parallel);
            for (std::uint64_t q : {2ull, 3ull, 4ull}) {
                CHECK(quadforms::torsion_profile(serial, q, 2, Exec::serial) ==
                      quadforms::torsion_profile(serial, q, 2, Exec::parallel));
            }
        }
    }

    TEST_CASE("associativity scans")
    {
        auto g = groupcore::builtin_group("C3wrC3");
        auto flat = g.flat();
        CHECK_FALSE(groupcore::find_nonassociative_triple(flat, g.order(), Exec::serial));
        CHECK_FALSE(groupcore::find_nonassociative_triple(flat, g.order(), Exec::parallel));
        /* break associativity in a late row so the first failure is not trivial */
        std::swap(flat[70 * 81 + 5], flat[70 * 81 + 6]);
        std::swap(flat[71 * 81 + 5], flat[71 * 81 + 6]);
        auto s = groupcore::find_nonassociative_triple(flat, g.order(), Exec::serial);
        auto p = groupcore::find_nonassociative_triple(flat, g.order(), Exec::parallel);
        REQUIRE(s.has_value());
        CHECK(s == p);
        CHECK(groupcore::find_nonassociative_sample(flat, g.order(), 20000, Exec::serial) ==
              groupcore::find_nonassociative_sample(flat, g.order(), 20000, Exec::parallel));
    }

    TEST_CASE("Cayley tables of free quotients")
    {
        magnus::FreeQuotient a(3, 2, 4, Exec::serial);
        magnus::FreeQuotient b(3, 2, 4, Exec::parallel);
        CHECK(a.table().flat() == b.table().flat());
    }
}
