#ifndef PTOWER_QUADFORMS_HPP
#define PTOWER_QUADFORMS_HPP

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "ptower/bigint.hpp"
#include "ptower/exec.hpp"

/*
 * Class groups of imaginary quadratic fields, realized as reduced positive
 * definite binary quadratic forms under Gauss composition.
 */
namespace ptower::quadforms {

struct FieldSpec {
    BigInt m; /* negative squarefree radicand */
    BigInt D; /* fundamental discriminant of Q(sqrt(m)) */
};

/*
 * ax^2 + bxy + cy^2.  A form is reduced when |b| <= a <= c and b >= 0
 * whenever |b| == a or a == c.
 */
struct QuadForm {
    BigInt a, b, c;

    BigInt discriminant() const { return b * b - 4 * a * c; }
    bool is_reduced() const;

    friend bool operator==(QuadForm const & x, QuadForm const & y)
    {
        return x.a == y.a && x.b == y.b && x.c == y.c;
    }
    friend bool operator<(QuadForm const & x, QuadForm const & y);
};

std::ostream & operator<<(std::ostream & o, QuadForm const & f);

/* Elementary divisors d_1 | d_2 | ... | d_t, each > 1. */
struct AbelianStructure {
    std::vector<std::uint64_t> elementary_divisors;
    std::uint64_t order = 1;
};

FieldSpec fundamental_discriminant(BigInt const & m);

bool is_squarefree(BigInt const & n);
bool is_fundamental_discriminant(BigInt const & D);

/* BadDiscriminant unless D < 0 and D = 0,1 (mod 4). */
void check_discriminant(BigInt const & D);

QuadForm reduce(QuadForm f);
QuadForm principal_form(BigInt const & D);
QuadForm compose(QuadForm const & f1, QuadForm const & f2);
QuadForm inverse(QuadForm const & f);
QuadForm power(QuadForm const & f, std::uint64_t e);

/*
 * All reduced primitive forms of discriminant D, one per class, sorted by
 * (a, b, c).  The parallel path partitions the b-loop and sorts the merged
 * list, so the output does not depend on the thread count.
 */
std::vector<QuadForm> enumerate_reduced_forms(BigInt const & D, Exec exec = Exec::parallel);

/*
 * counts[k-1] = #{ g : g^(q^k) = 1 } for k = 1..depth.  This is the one
 * scan both the structure and the p-rank are read from.
 */
std::vector<std::uint64_t> torsion_profile(std::span<QuadForm const> forms, std::uint64_t q,
                                           unsigned depth, Exec exec = Exec::parallel);

AbelianStructure structure_of(std::span<QuadForm const> forms, Exec exec = Exec::parallel);
AbelianStructure class_group_structure(BigInt const & D, Exec exec = Exec::parallel);

unsigned p_rank_of(std::span<QuadForm const> forms, std::uint32_t p, Exec exec = Exec::parallel);
unsigned p_rank(BigInt const & D, std::uint32_t p, Exec exec = Exec::parallel);

unsigned two_rank_genus(BigInt const & D);

} // namespace ptower::quadforms

#endif /* PTOWER_QUADFORMS_HPP */
