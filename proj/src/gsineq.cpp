#include "ptower/gsineq.hpp"

#include <algorithm>
#include <string>

#include "ptower/error.hpp"

namespace ptower::gsineq {

namespace {

void trim(Poly & p)
{
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

Poly derivative(Poly const & p)
{
    Poly out;
    for (std::size_t k = 1; k < p.size(); ++k)
        out.push_back(p[k] * static_cast<unsigned long>(k));
    trim(out);
    return out;
}

Poly remainder(Poly a, Poly const & b)
{
    trim(a);
    Rational lead = b.back();
    while (a.size() >= b.size() && !a.empty()) {
        Rational f = a.back() / lead;
        std::size_t shift = a.size() - b.size();
        for (std::size_t k = 0; k < b.size(); ++k)
            a[shift + k] -= f * b[k];
        a.pop_back();
        trim(a);
    }
    return a;
}

int sign(Rational const & q) { return sgn(q); }

unsigned variations(std::vector<Poly> const & seq, Rational const & t)
{
    unsigned v = 0;
    int prev = 0;
    for (auto const & p : seq) {
        int s = sign(evaluate(p, t));
        if (s == 0)
            continue;
        if (prev != 0 && s != prev)
            ++v;
        prev = s;
    }
    return v;
}

/* divide by (t - 1) */
Poly deflate_at_one(Poly const & p)
{
    Poly q(p.size() - 1);
    Rational carry = 0;
    for (std::size_t k = p.size() - 1; k >= 1; --k) {
        carry = p[k] + carry;
        q[k - 1] = carry;
    }
    return q;
}

constexpr unsigned long kSmallDenominatorScan = 64;
constexpr unsigned kDyadicDepthLimit = 256;

std::optional<Rational> find_witness(Poly const & poly, BigInt const & leading)
{
    auto nonpositive = [&](Rational const & t) { return sgn(evaluate(poly, t)) <= 0; };

    /* smallest denominators first, so certificates stay readable */
    for (unsigned long q = 2; q <= kSmallDenominatorScan; ++q)
        for (unsigned long n = 1; n < q; ++n) {
            Rational t(n, q);
            t.canonicalize();
            if (t.get_den() == q && nonpositive(t))
                return t;
        }

    /* dyadic bisection restricted to root-carrying intervals */
    std::vector<std::pair<Rational, Rational>> live{{Rational(0), Rational(1)}};
    for (unsigned depth = 1; depth <= kDyadicDepthLimit && !live.empty(); ++depth) {
        std::vector<std::pair<Rational, Rational>> next;
        for (auto const & [lo, hi] : live) {
            Rational mid = (lo + hi) / 2;
            if (nonpositive(mid))
                return mid;
            for (auto const & part : {std::make_pair(lo, mid), std::make_pair(mid, hi)})
                if (count_roots(poly, part.first, part.second) > 0)
                    next.push_back(part);
        }
        live = std::move(next);
    }

    /* rational roots of an integer polynomial with constant term 1 are 1/q, q | lead */
    BigInt lead = abs(leading);
    for (BigInt q = 2; q <= lead && q < 100000; ++q)
        if (mpz_divisible_p(lead.get_mpz_t(), q.get_mpz_t())) {
            Rational t(1, q);
            if (evaluate(poly, t) == 0)
                return t;
        }
    return std::nullopt;
}

} // namespace

ZassenhausPolynomial::ZassenhausPolynomial(unsigned d_, std::map<unsigned, BigInt> levels_)
    : d(d_), levels(std::move(levels_))
{
    for (auto const & [k, r] : levels) {
        if (k < 2)
            fail(ErrorKind::InvalidArgument,
                 "relation level " + std::to_string(k) + " below 2 (r_1 = 0 for minimal presentations)");
        if (r < 0)
            fail(ErrorKind::InvalidArgument, "negative relation count at level " + std::to_string(k));
    }
}

std::vector<BigInt> ZassenhausPolynomial::coefficients() const
{
    unsigned top = 1;
    for (auto const & [k, r] : levels)
        top = std::max(top, k);
    std::vector<BigInt> c(top + 1, 0);
    c[0] = 1;
    c[1] = -static_cast<long>(d);
    for (auto const & [k, r] : levels)
        c[k] += r;
    while (c.size() > 1 && c.back() == 0)
        c.pop_back();
    return c;
}

Rational evaluate(Poly const & poly, Rational const & t)
{
    Rational acc = 0;
    for (std::size_t k = poly.size(); k-- > 0;)
        acc = acc * t + poly[k];
    return acc;
}

Rational evaluate(ZassenhausPolynomial const & z, Rational const & t)
{
    Poly p;
    for (auto const & c : z.coefficients())
        p.emplace_back(c);
    return evaluate(p, t);
}

std::vector<Poly> sturm_sequence(Poly const & poly)
{
    std::vector<Poly> seq;
    Poly a = poly;
    trim(a);
    if (a.empty())
        return seq;
    seq.push_back(a);
    Poly b = derivative(a);
    while (!b.empty()) {
        seq.push_back(b);
        Poly r = remainder(seq[seq.size() - 2], b);
        for (auto & c : r)
            c = -c;
        b = std::move(r);
    }
    return seq;
}

unsigned count_roots(Poly const & poly, Rational const & lo, Rational const & hi)
{
    Poly p = poly;
    trim(p);
    if (p.size() <= 1)
        return 0;
    /* Sturm counts roots in (lo, hi]; an endpoint root is discounted separately */
    auto seq = sturm_sequence(p);
    unsigned lo_var = variations(seq, lo);
    unsigned hi_var = variations(seq, hi);
    unsigned n = lo_var >= hi_var ? lo_var - hi_var : 0;
    if (evaluate(p, hi) == 0 && n > 0)
        --n;
    return n;
}

RootReport gs_contradiction(ZassenhausPolynomial const & z)
{
    Poly p;
    for (auto const & c : z.coefficients())
        p.emplace_back(c);
    trim(p);
    /* Z(0) = 1 > 0, so a non-positive point in (0,1) exists iff a root does */
    Poly q = p;
    while (q.size() > 1 && evaluate(q, 1) == 0)
        q = deflate_at_one(q);

    RootReport report;
    auto seq = sturm_sequence(q);
    unsigned at0 = variations(seq, 0);
    unsigned at1 = variations(seq, 1);
    report.roots_in_unit_interval = at0 >= at1 ? at0 - at1 : 0;
    report.has_nonpositive_point = report.roots_in_unit_interval > 0;
    if (report.has_nonpositive_point) {
        auto coeffs = z.coefficients();
        report.witness = find_witness(p, coeffs.back());
        if (report.witness) {
            report.value = evaluate(p, *report.witness);
            if (sgn(*report.value) > 0)
                fail(ErrorKind::InternalError, "witness does not certify Z <= 0");
        }
    }
    return report;
}

Rational medium_bound(unsigned d, unsigned m)
{
    if (d < 1 || m < 2)
        fail(ErrorKind::InvalidArgument, "medium bound needs d >= 1 and m >= 2");
    BigInt num, den, dm, m1;
    mpz_ui_pow_ui(dm.get_mpz_t(), d, m);
    mpz_ui_pow_ui(m1.get_mpz_t(), m - 1, m - 1);
    mpz_ui_pow_ui(den.get_mpz_t(), m, m);
    num = dm * m1;
    Rational q(num, den);
    q.canonicalize();
    return q;
}

bool medium_contradiction(unsigned d, BigInt const & r, unsigned m)
{
    if (r < 0)
        fail(ErrorKind::InvalidArgument, "relation count must be non-negative");
    return Rational(r) <= medium_bound(d, m);
}

ZassenhausPolynomial two_relation_polynomial(unsigned i, unsigned j)
{
    std::map<unsigned, BigInt> levels;
    levels[i] += 1;
    levels[j] += 1;
    return ZassenhausPolynomial(2, std::move(levels));
}

AdmissibleTypes admissible_types(unsigned d, unsigned max_level)
{
    if (d != 2)
        fail(ErrorKind::RankUnsupported, "admissible types are enumerated for d = 2 only");
    if (max_level < 3)
        fail(ErrorKind::InvalidArgument, "max_level must be at least 3");
    AdmissibleTypes out;
    /* odd levels only (parity), at least 3 (r_1 = r_2 = 0) */
    for (unsigned i = 3; i <= max_level; i += 2)
        for (unsigned j = i; j <= max_level; j += 2)
            if (!gs_contradiction(two_relation_polynomial(i, j)).has_nonpositive_point)
                out.types.push_back({i, j});
    /*
     * Any pair with j beyond max_level has t^i + t^j <= t^3 + t^next on (0,1),
     * so one contradiction at (3, next) rules all of them out.
     */
    unsigned next = max_level % 2 == 0 ? max_level + 1 : max_level + 2;
    out.complete = gs_contradiction(two_relation_polynomial(3, next)).has_nonpositive_point;
    return out;
}

} // namespace ptower::gsineq
