#include "ptower/quadforms.hpp"

#include <algorithm>
#include <ostream>
#include <tuple>

#include <omp.h>

#include "ptower/error.hpp"
#include "ptower/fp_linalg.hpp"

namespace ptower::quadforms {

namespace {

struct SmallForm {
    std::int64_t a, b, c;
    auto key() const { return std::tie(a, b, c); }
};

std::int64_t gcd64(std::int64_t x, std::int64_t y)
{
    x = x < 0 ? -x : x;
    y = y < 0 ? -y : y;
    while (y != 0) {
        std::int64_t t = x % y;
        x = y;
        y = t;
    }
    return x;
}

/* Reduced primitive forms with this b and -b; appends to out. */
void forms_for_b(std::int64_t absD, std::int64_t b, std::vector<SmallForm> & out)
{
    std::int64_t n = (b * b + absD) / 4;
    for (std::int64_t a = std::max<std::int64_t>(b, 1); a * a <= n; ++a) {
        if (n % a != 0)
            continue;
        std::int64_t c = n / a;
        if (gcd64(gcd64(a, b), c) != 1)
            continue;
        out.push_back({a, b, c});
        if (b != 0 && b != a && a != c)
            out.push_back({a, -b, c});
    }
}

std::vector<QuadForm> to_forms(std::vector<SmallForm> & small)
{
    std::sort(small.begin(), small.end(),
              [](SmallForm const & x, SmallForm const & y) { return x.key() < y.key(); });
    std::vector<QuadForm> forms;
    forms.reserve(small.size());
    for (auto const & f : small)
        forms.push_back({BigInt(static_cast<long>(f.a)), BigInt(static_cast<long>(f.b)),
                         BigInt(static_cast<long>(f.c))});
    return forms;
}

/* b -> b + 2ak with -a < b <= a, c recomputed from D. */
void normalize(QuadForm & f, BigInt const & D)
{
    BigInt two_a = 2 * f.a;
    BigInt q;
    BigInt t = f.b - f.a;
    mpz_cdiv_q(q.get_mpz_t(), t.get_mpz_t(), two_a.get_mpz_t());
    f.b -= two_a * q;
    f.c = (f.b * f.b - D) / (4 * f.a);
}

bool is_identity(QuadForm const & f) { return f.a == 1; }

std::vector<std::pair<std::uint64_t, unsigned>> factor(std::uint64_t n)
{
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (std::uint64_t q = 2; q * q <= n; ++q) {
        unsigned e = 0;
        while (n % q == 0) {
            n /= q;
            ++e;
        }
        if (e > 0)
            out.emplace_back(q, e);
    }
    if (n > 1)
        out.emplace_back(n, 1);
    return out;
}

/* log_q(n), or -1 if n is not a power of q */
int exact_log(std::uint64_t n, std::uint64_t q)
{
    int k = 0;
    while (n > 1) {
        if (n % q != 0)
            return -1;
        n /= q;
        ++k;
    }
    return n == 1 ? k : -1;
}

} // namespace

bool QuadForm::is_reduced() const
{
    BigInt abs_b = abs(b);
    if (!(abs_b <= a && a <= c))
        return false;
    if ((abs_b == a || a == c) && b < 0)
        return false;
    return true;
}

bool operator<(QuadForm const & x, QuadForm const & y)
{
    if (x.a != y.a)
        return x.a < y.a;
    if (x.b != y.b)
        return x.b < y.b;
    return x.c < y.c;
}

std::ostream & operator<<(std::ostream & o, QuadForm const & f)
{
    return o << "(" << f.a << "," << f.b << "," << f.c << ")";
}

bool is_squarefree(BigInt const & n)
{
    BigInt m = abs(n);
    if (m == 0)
        return false;
    for (unsigned long q = 2; BigInt(q) * q <= m; ++q) {
        if (mpz_divisible_ui_p(m.get_mpz_t(), q)) {
            m /= q;
            if (mpz_divisible_ui_p(m.get_mpz_t(), q))
                return false;
        }
    }
    return true;
}

FieldSpec fundamental_discriminant(BigInt const & m)
{
    if (m >= 0)
        fail(ErrorKind::NotNegative, "radicand must be negative, got " + m.get_str());
    if (!is_squarefree(m))
        fail(ErrorKind::NotSquarefree, "radicand " + m.get_str() + " is not squarefree");
    unsigned long r = mpz_fdiv_ui(m.get_mpz_t(), 4);
    return {m, r == 1 ? m : BigInt(4 * m)};
}

void check_discriminant(BigInt const & D)
{
    if (D >= 0)
        fail(ErrorKind::BadDiscriminant, "discriminant must be negative, got " + D.get_str());
    unsigned long r = mpz_fdiv_ui(D.get_mpz_t(), 4);
    if (r != 0 && r != 1)
        fail(ErrorKind::BadDiscriminant, "discriminant " + D.get_str() + " is not 0 or 1 mod 4");
}

bool is_fundamental_discriminant(BigInt const & D)
{
    if (D >= 0)
        return false;
    unsigned long r = mpz_fdiv_ui(D.get_mpz_t(), 4);
    if (r == 1)
        return is_squarefree(D);
    if (r != 0)
        return false;
    BigInt m = D / 4;
    unsigned long rm = mpz_fdiv_ui(m.get_mpz_t(), 4);
    return (rm == 2 || rm == 3) && is_squarefree(m);
}

QuadForm reduce(QuadForm f)
{
    BigInt D = f.discriminant();
    if (f.a <= 0 || D >= 0)
        fail(ErrorKind::NotPositiveDefinite, "form is not positive definite");
    normalize(f, D);
    while (f.a > f.c) {
        std::swap(f.a, f.c);
        f.b = -f.b;
        normalize(f, D);
    }
    if (f.a == f.c && f.b < 0)
        f.b = -f.b;
    return f;
}

QuadForm principal_form(BigInt const & D)
{
    check_discriminant(D);
    BigInt b = mpz_fdiv_ui(D.get_mpz_t(), 2) == 1 ? 1 : 0;
    return {BigInt(1), b, (b * b - D) / 4};
}

/*
 * Dirichlet composition in the arrangement of Shanks: solve for the united
 * middle coefficient with two extended gcds, then reduce.
 */
QuadForm compose(QuadForm const & f1_in, QuadForm const & f2_in)
{
    BigInt D = f1_in.discriminant();
    if (D != f2_in.discriminant())
        fail(ErrorKind::DiscriminantMismatch, "forms have different discriminants");
    QuadForm const * f1 = &f1_in;
    QuadForm const * f2 = &f2_in;
    if (f1->a > f2->a)
        std::swap(f1, f2);
    BigInt const & a1 = f1->a;
    BigInt const & a2 = f2->a;
    BigInt const & b2 = f2->b;
    BigInt const & c2 = f2->c;
    BigInt s = (f1->b + b2) / 2;
    BigInt n = b2 - s;

    BigInt y1, d, u, v;
    if (mpz_divisible_p(a2.get_mpz_t(), a1.get_mpz_t())) {
        y1 = 0;
        d = a1;
    } else {
        mpz_gcdext(d.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), a2.get_mpz_t(), a1.get_mpz_t());
        y1 = u;
    }
    BigInt x2, y2, d1;
    if (mpz_divisible_p(s.get_mpz_t(), d.get_mpz_t())) {
        y2 = -1;
        x2 = 0;
        d1 = d;
    } else {
        mpz_gcdext(d1.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), s.get_mpz_t(), d.get_mpz_t());
        x2 = u;
        y2 = -v;
    }
    BigInt v1 = a1 / d1;
    BigInt v2 = a2 / d1;
    BigInt r = y1 * y2 * n - x2 * c2;
    mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), v1.get_mpz_t());
    QuadForm out;
    out.b = b2 + 2 * v2 * r;
    out.a = v1 * v2;
    out.c = (c2 * d1 + r * (b2 + v2 * r)) / v1;
    if (out.discriminant() != D)
        fail(ErrorKind::InternalError, "composition produced the wrong discriminant");
    return reduce(std::move(out));
}

QuadForm inverse(QuadForm const & f)
{
    return reduce({f.a, -f.b, f.c});
}

QuadForm power(QuadForm const & f, std::uint64_t e)
{
    QuadForm result = principal_form(f.discriminant());
    QuadForm base = reduce(f);
    while (e > 0) {
        if (e & 1)
            result = compose(result, base);
        e >>= 1;
        if (e > 0)
            base = compose(base, base);
    }
    return result;
}

std::vector<QuadForm> enumerate_reduced_forms(BigInt const & D, Exec exec)
{
    check_discriminant(D);
    auto small_d = to_int64(D);
    if (!small_d || *small_d < -(std::int64_t{1} << 60))
        fail(ErrorKind::InvalidArgument,
             "discriminant " + D.get_str() + " is too large for trial-division enumeration");
    std::int64_t absD = -*small_d;
    std::int64_t b0 = absD % 2; /* b = D (mod 2) */
    std::int64_t nb = 0;
    while (3 * (b0 + 2 * nb) * (b0 + 2 * nb) <= absD)
        ++nb;

    std::vector<SmallForm> all;
    if (exec == Exec::serial) {
        for (std::int64_t i = 0; i < nb; ++i)
            forms_for_b(absD, b0 + 2 * i, all);
    } else {
#pragma omp parallel
        {
            std::vector<SmallForm> local;
#pragma omp for schedule(dynamic, 16) nowait
            for (std::int64_t i = 0; i < nb; ++i)
                forms_for_b(absD, b0 + 2 * i, local);
#pragma omp critical(ptower_enumerate_merge)
            all.insert(all.end(), local.begin(), local.end());
        }
    }
    return to_forms(all);
}

std::vector<std::uint64_t> torsion_profile(std::span<QuadForm const> forms, std::uint64_t q,
                                           unsigned depth, Exec exec)
{
    std::vector<std::uint64_t> counts(depth, 0);
    auto scan = [&](QuadForm const & g, std::vector<std::uint64_t> & acc) {
        QuadForm u = g;
        for (unsigned k = 0; k < depth; ++k) {
            u = power(u, q);
            if (is_identity(u)) {
                for (unsigned j = k; j < depth; ++j)
                    ++acc[j];
                return;
            }
        }
    };
    auto n = static_cast<std::int64_t>(forms.size());
    if (exec == Exec::serial) {
        for (std::int64_t i = 0; i < n; ++i)
            scan(forms[i], counts);
    } else {
#pragma omp parallel
        {
            std::vector<std::uint64_t> local(depth, 0);
#pragma omp for schedule(dynamic, 32) nowait
            for (std::int64_t i = 0; i < n; ++i)
                scan(forms[i], local);
#pragma omp critical(ptower_torsion_merge)
            for (unsigned k = 0; k < depth; ++k)
                counts[k] += local[k];
        }
    }
    return counts;
}

AbelianStructure structure_of(std::span<QuadForm const> forms, Exec exec)
{
    AbelianStructure out;
    std::uint64_t h = forms.size();
    out.order = h;
    /* per prime: exponents of the cyclic factors, largest first */
    std::vector<std::pair<std::uint64_t, std::vector<unsigned>>> parts;
    for (auto [q, e] : factor(h)) {
        auto counts = torsion_profile(forms, q, e, exec);
        std::vector<int> rank_at(e + 1, 0); /* log_q #G[q^k] */
        for (unsigned k = 1; k <= e; ++k) {
            int l = exact_log(counts[k - 1], q);
            if (l < 0)
                fail(ErrorKind::InternalError, "torsion count is not a prime power");
            rank_at[k] = l;
        }
        if (rank_at[e] != static_cast<int>(e))
            fail(ErrorKind::InternalError, "q-primary part has the wrong order");
        /* at_least[k] = number of cyclic factors of order >= q^k */
        std::vector<int> at_least(e + 2, 0);
        for (unsigned k = 1; k <= e; ++k)
            at_least[k] = rank_at[k] - rank_at[k - 1];
        std::vector<unsigned> exps;
        for (unsigned k = e; k >= 1; --k) {
            int exactly = at_least[k] - at_least[k + 1];
            if (exactly < 0)
                fail(ErrorKind::InternalError, "inconsistent torsion profile");
            exps.insert(exps.end(), static_cast<std::size_t>(exactly), k);
        }
        parts.emplace_back(q, std::move(exps));
    }
    std::size_t t = 0;
    for (auto const & [q, exps] : parts)
        t = std::max(t, exps.size());
    std::vector<std::uint64_t> divisors(t, 1); /* largest first */
    for (auto const & [q, exps] : parts)
        for (std::size_t i = 0; i < exps.size(); ++i)
            for (unsigned k = 0; k < exps[i]; ++k)
                divisors[i] *= q;
    std::reverse(divisors.begin(), divisors.end());
    std::uint64_t prod = 1;
    for (auto d : divisors)
        prod *= d;
    if (prod != h)
        fail(ErrorKind::InternalError, "elementary divisors do not multiply to the class number");
    out.elementary_divisors = std::move(divisors);
    return out;
}

AbelianStructure class_group_structure(BigInt const & D, Exec exec)
{
    auto forms = enumerate_reduced_forms(D, exec);
    return structure_of(forms, exec);
}

unsigned p_rank_of(std::span<QuadForm const> forms, std::uint32_t p, Exec exec)
{
    if (!fp::is_prime(p))
        fail(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
    auto counts = torsion_profile(forms, p, 1, exec);
    int l = exact_log(counts[0], p);
    if (l < 0)
        fail(ErrorKind::InternalError,
             "p-torsion count " + std::to_string(counts[0]) + " is not a power of p");
    return static_cast<unsigned>(l);
}

unsigned p_rank(BigInt const & D, std::uint32_t p, Exec exec)
{
    if (!fp::is_prime(p))
        fail(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
    auto forms = enumerate_reduced_forms(D, exec);
    return p_rank_of(forms, p, exec);
}

unsigned two_rank_genus(BigInt const & D)
{
    if (!is_fundamental_discriminant(D))
        fail(ErrorKind::BadDiscriminant, D.get_str() + " is not a negative fundamental discriminant");
    BigInt m = abs(D);
    unsigned t = 0;
    for (unsigned long q = 2; BigInt(q) * q <= m; ++q) {
        if (mpz_divisible_ui_p(m.get_mpz_t(), q)) {
            ++t;
            while (mpz_divisible_ui_p(m.get_mpz_t(), q))
                m /= q;
        }
    }
    if (m > 1)
        ++t;
    return t - 1;
}

} // namespace ptower::quadforms
