#ifndef PTOWER_GSINEQ_HPP
#define PTOWER_GSINEQ_HPP

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "ptower/bigint.hpp"

/*
 * Golod-Shafarevich inequality checks in exact rational arithmetic.  No
 * floating point anywhere: the admissible/excluded boundary ((3,7) against
 * (3,9)) is a sign decision that must be exact.
 */
namespace ptower::gsineq {

/* Z(t) = sum_k r_k t^k - d t + 1, with levels k >= 2 */
struct ZassenhausPolynomial {
    unsigned d = 0;
    std::map<unsigned, BigInt> levels;

    ZassenhausPolynomial() = default;
    /* InvalidArgument for a level below 2 or a negative count */
    ZassenhausPolynomial(unsigned d, std::map<unsigned, BigInt> levels);

    /* coefficients by degree, index 0 = constant */
    std::vector<BigInt> coefficients() const;
};

struct RootReport {
    bool has_nonpositive_point = false;
    std::optional<Rational> witness;   /* Z(witness) <= 0, exact */
    std::optional<Rational> value;     /* Z(witness) */
    unsigned roots_in_unit_interval = 0; /* distinct real roots in (0,1) */
};

struct ZassenhausType {
    unsigned i, j;
    bool operator==(ZassenhausType const &) const = default;
    auto operator<=>(ZassenhausType const &) const = default;
};

struct AdmissibleTypes {
    std::vector<ZassenhausType> types;
    /* every pair with a level beyond max_level is excluded */
    bool complete = false;
};

using Poly = std::vector<Rational>; /* by degree */

Rational evaluate(ZassenhausPolynomial const & z, Rational const & t);
Rational evaluate(Poly const & poly, Rational const & t);

std::vector<Poly> sturm_sequence(Poly const & poly);
/* Distinct real roots in the open interval (lo, hi). */
unsigned count_roots(Poly const & poly, Rational const & lo, Rational const & hi);

RootReport gs_contradiction(ZassenhausPolynomial const & z);

/* d^m (m-1)^(m-1) / m^m */
Rational medium_bound(unsigned d, unsigned m);
/* r <= medium_bound(d, m) */
bool medium_contradiction(unsigned d, BigInt const & r, unsigned m);

/* Z = t^i + t^j - 2t + 1 */
ZassenhausPolynomial two_relation_polynomial(unsigned i, unsigned j);

AdmissibleTypes admissible_types(unsigned d, unsigned max_level);

} // namespace ptower::gsineq

#endif /* PTOWER_GSINEQ_HPP */
