#include <numeric>
#include <random>
#include <tuple>

#include "oracles.hpp"
#include "test_util.hpp"

#include "ptower/quadforms.hpp"

using namespace ptower;
using namespace ptower::quadforms;

namespace {

QuadForm to_form(oracle::Form const & f) { return {BigInt(f[0]), BigInt(f[1]), BigInt(f[2])}; }

oracle::Form to_oracle(QuadForm const & f)
{
    return {f.a.get_si(), f.b.get_si(), f.c.get_si()};
}

std::vector<oracle::Form> to_oracle(std::vector<QuadForm> const & forms)
{
    std::vector<oracle::Form> out;
    for (auto const & f : forms)
        out.push_back(to_oracle(f));
    return out;
}

/* fundamental discriminants used across the suite */
std::vector<std::int64_t> const corpus{-3, -4, -7, -8, -15, -20, -23, -39, -47, -56, -84, -104,
                                       -260, -420, -1155, -3299, -3896, -4027, -5460, -9748};

} // namespace

TEST_SUITE("quadforms")
{
    TEST_CASE("fundamental discriminants from radicands")
    {
        CHECK(fundamental_discriminant(BigInt(-1)).D == -4);
        CHECK(fundamental_discriminant(BigInt(-5)).D == -20);
        CHECK(fundamental_discriminant(BigInt(-23)).D == -23);
        CHECK(fundamental_discriminant(BigInt(-4849845)).D == -19399380);
        CHECK_ERROR_KIND(fundamental_discriminant(BigInt(-12)), ErrorKind::NotSquarefree);
        CHECK_ERROR_KIND(fundamental_discriminant(BigInt(7)), ErrorKind::NotNegative);
        CHECK(is_fundamental_discriminant(BigInt(-3299)));
        CHECK_FALSE(is_fundamental_discriminant(BigInt(-12)));
        CHECK_FALSE(is_fundamental_discriminant(BigInt(-16)));
        CHECK_FALSE(is_fundamental_discriminant(BigInt(5)));
        CHECK_ERROR_KIND(check_discriminant(BigInt(-6)), ErrorKind::BadDiscriminant);
    }

    TEST_CASE("enumeration matches the exhaustive scan")
    {
        for (auto D : corpus) {
            CAPTURE(D);
            auto forms = enumerate_reduced_forms(BigInt(D), Exec::serial);
            CHECK(to_oracle(forms) == oracle::brute_reduced_forms(D));
            for (auto const & f : forms) {
                CHECK(f.is_reduced());
                CHECK(f.discriminant() == D);
            }
        }
        CHECK(enumerate_reduced_forms(BigInt(-23)).size() == 3);
    }

    TEST_CASE("reduction")
    {
        CHECK(reduce({BigInt(6), BigInt(5), BigInt(2)}) == QuadForm{BigInt(2), BigInt(-1), BigInt(3)});
        CHECK_ERROR_KIND(reduce({BigInt(-1), BigInt(1), BigInt(6)}), ErrorKind::NotPositiveDefinite);
        std::mt19937_64 rng(11);
        std::uniform_int_distribution<std::int64_t> shift(-3, 3);
        auto base = oracle::brute_reduced_forms(-3299);
        for (int trial = 0; trial < 2000; ++trial) {
            auto f = base[static_cast<std::size_t>(trial) % base.size()];
            /* random word in the generators S and T of SL_2(Z), as a matrix [[x,z],[y,w]] */
            std::int64_t x = 1, z = 0, y = 0, w = 1;
            for (int step = 0; step < 4; ++step) {
                std::int64_t k = shift(rng);
                z += k * x;
                w += k * y;
                std::tie(x, z) = std::make_pair(z, -x);
                std::tie(y, w) = std::make_pair(w, -y);
            }
            REQUIRE(x * w - y * z == 1);
            auto eval = [&](std::int64_t u, std::int64_t v) { return f[0] * u * u + f[1] * u * v + f[2] * v * v; };
            std::int64_t b = 2 * f[0] * x * z + f[1] * (x * w + y * z) + 2 * f[2] * y * w;
            QuadForm g{BigInt(eval(x, y)), BigInt(b), BigInt(eval(z, w))};
            CHECK(g.discriminant() == -3299);
            auto r = reduce(g);
            CHECK(r == to_form(f));
            CHECK(reduce(r) == r);
        }
    }

    TEST_CASE("composition agrees with Dirichlet composition")
    {
        for (auto D : corpus) {
            CAPTURE(D);
            auto forms = oracle::brute_reduced_forms(D);
            for (auto const & f : forms)
                for (auto const & g : forms)
                    CHECK(to_oracle(compose(to_form(f), to_form(g))) == oracle::compose(f, g));
        }
        /* D = -23: (2,1,3)^2 = (2,-1,3) */
        QuadForm f{BigInt(2), BigInt(1), BigInt(3)};
        CHECK(compose(f, f) == QuadForm{BigInt(2), BigInt(-1), BigInt(3)});
        CHECK(power(f, 3) == principal_form(BigInt(-23)));
        CHECK_ERROR_KIND(compose(f, principal_form(BigInt(-20))), ErrorKind::DiscriminantMismatch);
    }

    TEST_CASE("group laws on random pairs")
    {
        std::mt19937_64 rng(3);
        for (std::int64_t D : {-3299, -3896, -9748}) {
            auto forms = enumerate_reduced_forms(BigInt(D));
            auto one = principal_form(BigInt(D));
            std::uniform_int_distribution<std::size_t> pick(0, forms.size() - 1);
            for (int trial = 0; trial < 1000; ++trial) {
                auto const & f = forms[pick(rng)];
                auto const & g = forms[pick(rng)];
                auto const & h = forms[pick(rng)];
                CHECK(compose(f, g) == compose(g, f));
                CHECK(compose(compose(f, g), h) == compose(f, compose(g, h)));
                CHECK(compose(f, one) == f);
                CHECK(compose(f, inverse(f)) == one);
                CHECK(std::binary_search(forms.begin(), forms.end(), compose(f, g)));
            }
        }
    }

    TEST_CASE("structure and p-ranks agree with the oracle group")
    {
        for (auto D : corpus) {
            CAPTURE(D);
            auto g = oracle::class_group(D);
            auto s = class_group_structure(BigInt(D), Exec::serial);
            std::uint64_t product = 1;
            for (auto e : s.elementary_divisors)
                product *= e;
            CHECK(product == g.forms.size());
            CHECK(s.order == g.forms.size());
            for (std::size_t i = 1; i < s.elementary_divisors.size(); ++i)
                CHECK(s.elementary_divisors[i] % s.elementary_divisors[i - 1] == 0);
            for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
                std::size_t t = oracle::torsion_count(g, p);
                unsigned expected = 0;
                while (t > 1) {
                    t /= p;
                    ++expected;
                }
                CHECK(p_rank(BigInt(D), p) == expected);
                /* torsion of every order divides out as the elementary divisors predict */
                for (std::uint64_t q : {4ull, 9ull, 8ull}) {
                    std::uint64_t predicted = 1;
                    for (auto e : s.elementary_divisors)
                        predicted *= std::gcd(e, q);
                    CHECK(oracle::torsion_count(g, q) == predicted);
                }
            }
        }
        auto s23 = class_group_structure(BigInt(-23));
        CHECK(s23.elementary_divisors == std::vector<std::uint64_t>{3});
        CHECK(p_rank(BigInt(-23), 3) == 1);
        CHECK(p_rank(BigInt(-3299), 3) == 2);
        CHECK_ERROR_KIND(p_rank(BigInt(-23), 4), ErrorKind::NotPrime);
    }

    TEST_CASE("genus theory")
    {
        for (auto D : corpus) {
            CAPTURE(D);
            CHECK(two_rank_genus(BigInt(D)) == oracle::prime_divisor_count(D) - 1);
            CHECK(p_rank(BigInt(D), 2) == two_rank_genus(BigInt(D)));
        }
        CHECK_ERROR_KIND(two_rank_genus(BigInt(-12)), ErrorKind::BadDiscriminant);
    }

    TEST_CASE("arbitrary precision inputs are representable")
    {
        BigInt D("-222637549223");
        CHECK(is_fundamental_discriminant(D));
        auto one = principal_form(D);
        CHECK(one.discriminant() == D);
        CHECK(compose(one, one) == one);
    }
}
