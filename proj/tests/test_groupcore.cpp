#include <algorithm>

#include "oracles.hpp"
#include "test_util.hpp"

#include "ptower/builtin_groups.hpp"
#include "ptower/groupcore.hpp"

using namespace ptower;
using namespace ptower::groupcore;

namespace {

Subgroup frattini(GroupTable const & g)
{
    auto whole = whole_group(g);
    std::vector<Subgroup> parts{power_subgroup(g, whole, g.prime()), commutator_subgroup(g, whole, whole)};
    return join_normal(g, parts);
}

bool elementary_abelian_quotient(GroupTable const & g, Subgroup const & big, Subgroup const & small)
{
    for (Elem x : big.elements()) {
        if (!small.contains(g.pow(x, g.prime())))
            return false;
        for (Elem y : big.elements())
            if (!small.contains(g.commutator(x, y)))
                return false;
    }
    return true;
}

std::vector<fp::Vec> as_vecs(std::vector<std::vector<std::uint32_t>> const & rows)
{
    return {rows.begin(), rows.end()};
}

} // namespace

TEST_SUITE("groupcore")
{
    TEST_CASE("group axioms are validated")
    {
        /* row 1 repeats an entry */
        CHECK_ERROR_KIND(GroupTable(2, 2, {0, 1, 1, 1}), ErrorKind::GroupAxiomError);
        /* identity not at index 0 */
        CHECK_ERROR_KIND(GroupTable(2, 2, {1, 0, 0, 1}), ErrorKind::GroupAxiomError);
        /* entry out of range */
        CHECK_ERROR_KIND(GroupTable(2, 2, {0, 1, 1, 2}), ErrorKind::GroupAxiomError);
        /* order 3 is not a power of 2 */
        CHECK_ERROR_KIND(GroupTable(2, 3, {0, 1, 2, 1, 2, 0, 2, 0, 1}), ErrorKind::GroupAxiomError);
        CHECK_ERROR_KIND(GroupTable(4, 1, {0}), ErrorKind::NotPrime);
        CHECK_ERROR_KIND(GroupTable(2, 2, {0, 1, 1}), ErrorKind::GroupAxiomError);

        /* C2^3 with an intercalate flipped: still a Latin square with identity, not associative */
        std::vector<Elem> quasi(64);
        for (Elem a = 0; a < 8; ++a)
            for (Elem b = 0; b < 8; ++b)
                quasi[a * 8 + b] = a ^ b;
        std::swap(quasi[1 * 8 + 4], quasi[1 * 8 + 7]);
        std::swap(quasi[2 * 8 + 4], quasi[2 * 8 + 7]);
        CHECK(find_nonassociative_triple(quasi, 8, Exec::serial).has_value());
        CHECK_ERROR_KIND(GroupTable(2, 8, quasi), ErrorKind::GroupAxiomError);
    }

    TEST_CASE("builtin corpus")
    {
        for (auto const & name : builtin_group_names()) {
            CAPTURE(name);
            auto g = builtin_group(name);
            CHECK(is_builtin_group(name));
            CHECK(g.order() >= 1);
        }
        CHECK(builtin_group("Q8").order() == 8);
        CHECK(builtin_group("heisenberg_27").order() == 27);
        CHECK(builtin_group("C3wrC3").order() == 81);
        CHECK_ERROR_KIND(builtin_group("C6"), ErrorKind::SchemaError);
        /* Q8 has a single involution, D4 has five */
        auto count_involutions = [](GroupTable const & g) {
            int n = 0;
            for (Elem x = 1; x < g.order(); ++x)
                n += g.element_order(x) == 2;
            return n;
        };
        CHECK(count_involutions(builtin_group("Q8")) == 1);
        CHECK(count_involutions(builtin_group("D4")) == 5);
        CHECK(exponent(builtin_group("heisenberg_27")) == 3);
        CHECK(exponent(builtin_group("heisenberg_125")) == 5);
    }

    TEST_CASE("Lazard formula agrees with the group-ring definition")
    {
        for (auto const & name : builtin_group_names()) {
            CAPTURE(name);
            auto g = builtin_group(name);
            auto oracle = dimension_series_oracle(g);
            auto lazard = dimension_series_lazard(g);
            CHECK(oracle == lazard);
            for (unsigned n = 1; n <= lazard.size() + 2; ++n) {
                CAPTURE(n);
                auto minimal = dimension_subgroup_lazard(g, n, LazardPairs::minimal);
                CHECK(dimension_subgroup_oracle(g, n) == minimal);
                CHECK(dimension_subgroup_lazard(g, n, LazardPairs::all) == minimal);
            }
        }
    }

    TEST_CASE("dimension series properties")
    {
        for (auto const & name : builtin_group_names()) {
            CAPTURE(name);
            auto g = builtin_group(name);
            auto series = dimension_series_lazard(g);
            REQUIRE(!series.empty());
            CHECK(series.front() == whole_group(g));
            CHECK(series.back().is_trivial());
            if (g.order() > 1)
                CHECK(series[1] == frattini(g));
            for (std::size_t i = 0; i + 1 < series.size(); ++i) {
                CHECK(series[i].includes(series[i + 1]));
                CHECK(is_normal(g, series[i]));
                CHECK(elementary_abelian_quotient(g, series[i], series[i + 1]));
                CHECK_NOTHROW(log_p_index(g.prime(), series[i].size(), series[i + 1].size()));
            }
            unsigned total = 0;
            for (auto f : dimension_factors(g))
                total += f;
            CHECK(total == g.log_order());
        }
    }

    TEST_CASE("cyclic groups jump exactly at powers of p")
    {
        /* F_p[C_{p^k}] = F_p[u]/(u^{p^k}) with u = g - 1, and g^{p^j} - 1 = u^{p^j} */
        for (auto [order, p] : {std::pair{8u, 2u}, std::pair{16u, 2u}, std::pair{9u, 3u},
                                std::pair{27u, 3u}, std::pair{25u, 5u}}) {
            auto g = cyclic_group(order, p);
            std::vector<unsigned> expected(order / p, 0);
            for (unsigned q = 1; q < order; q *= p)
                expected[q - 1] = 1;
            CHECK(dimension_factors(g) == expected);
        }
    }

    TEST_CASE("known filtrations")
    {
        CHECK(dimension_factors(builtin_group("Q8")) == std::vector<unsigned>{2, 1});
        CHECK(dimension_factors(builtin_group("D4")) == std::vector<unsigned>{2, 1});
        CHECK(dimension_factors(builtin_group("heisenberg_27")) == std::vector<unsigned>{2, 1});
        CHECK(dimension_factors(builtin_group("C2xC2")) == std::vector<unsigned>{2});
        CHECK(dim_g3_mod_g4(builtin_group("heisenberg_27")) == 0);
        auto lcs = lower_central_series(builtin_group("C3wrC3"));
        std::vector<std::size_t> sizes;
        for (auto const & s : lcs)
            sizes.push_back(s.size());
        CHECK(sizes == std::vector<std::size_t>{81, 9, 3, 1});
    }

    TEST_CASE("augmentation ideal powers")
    {
        for (auto const & name : builtin_group_names()) {
            auto g = builtin_group(name);
            if (g.order() > 32)
                continue;
            CAPTURE(name);
            auto powers = ideal_powers(g);
            CHECK(powers.front().dim() == g.order() - 1);
            CHECK(powers.back().dim() == 0);
            for (std::size_t i = 0; i + 1 < powers.size(); ++i)
                CHECK(powers[i].dim() > powers[i + 1].dim());
            for (unsigned n = 1; n <= powers.size(); ++n) {
                /* span of all n-fold products, built from full bases */
                auto span = as_vecs(oracle::ideal_power_span(g, n));
                fp::Subspace expected(g.prime(), g.order());
                for (auto const & v : span)
                    expected.insert(v);
                CHECK(expected == ideal_power(g, n));
            }
            /* I^a I^b inside I^(a+b) */
            for (unsigned a = 1; a <= 2; ++a)
                for (unsigned b = 1; b <= 2; ++b) {
                    auto target = ideal_power(g, a + b);
                    auto left = ideal_power(g, a), right = ideal_power(g, b);
                    for (auto const & u : left.basis())
                        for (auto const & v : right.basis())
                            CHECK(target.contains(fp::Vec(oracle::ring_mul(g, u, v))));
                }
        }
    }

    TEST_CASE("subgroup helpers")
    {
        auto g = builtin_group("D4");
        auto gens = generating_set(g);
        CHECK(gens.size() == 2);
        CHECK(generated_subgroup(g, gens) == whole_group(g));
        auto center = dimension_subgroup_lazard(g, 2);
        CHECK(center.size() == 2);
        CHECK(is_normal(g, center));
        /* a reflection generates a non-normal subgroup */
        for (Elem x = 1; x < g.order(); ++x) {
            std::vector<Elem> one{x};
            auto h = generated_subgroup(g, one);
            if (h.size() == 2 && !center.includes(h)) {
                CHECK_FALSE(is_normal(g, h));
                std::vector<Subgroup> parts{h, center};
                CHECK_ERROR_KIND(join_normal(g, parts), ErrorKind::InternalError);
                break;
            }
        }
    }
}
