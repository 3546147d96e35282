#ifndef PTOWER_MAGNUS_HPP
#define PTOWER_MAGNUS_HPP

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "ptower/exec.hpp"
#include "ptower/fp_linalg.hpp"
#include "ptower/groupcore.hpp"

/*
 * Words in a free group of rank d and their images in the truncated
 * non-commutative power series ring F_p<<X_1..X_d>> / (degree > N), where
 * x_i -> 1 + X_i.  A word lies in the n-th dimension subgroup of the free
 * pro-p group exactly when its image minus 1 has no terms below degree n.
 */
namespace ptower::magnus {

struct Letter {
    unsigned gen;      /* 1-based generator index */
    std::int64_t exp;  /* non-zero */

    bool operator==(Letter const &) const = default;
};

/* Freely reduced: adjacent letters use different generators. */
class Word
{
    unsigned rank_;
    std::vector<Letter> letters_;

    void reduce();

    public:

    explicit Word(unsigned rank = 2) : rank_(rank) {}
    Word(unsigned rank, std::vector<Letter> letters);

    static Word generator(unsigned rank, unsigned i, std::int64_t exp = 1);

    unsigned rank() const { return rank_; }
    std::vector<Letter> const & letters() const { return letters_; }
    bool is_identity() const { return letters_.empty(); }

    Word operator*(Word const & o) const;
    Word inverse() const;
    Word pow(std::int64_t e) const;

    bool operator==(Word const &) const = default;
};

/* [u,v] = u^-1 v^-1 u v */
Word commutator(Word const & u, Word const & v);
/* [w1, w2, ..., wk] = [[w1, w2], ..., wk] */
Word left_normed(std::span<Word const> parts);

class TruncatedSeries
{
    std::uint32_t p_;
    unsigned d_;
    unsigned n_;
    std::vector<fp::Residue> coeffs_; /* dense, graded by monomial length */

    std::size_t offset(unsigned len) const;
    std::size_t width(unsigned len) const;

    public:

    TruncatedSeries(std::uint32_t p, unsigned d, unsigned truncation);

    static TruncatedSeries one(std::uint32_t p, unsigned d, unsigned truncation);
    /* X_i, 0-based */
    static TruncatedSeries variable(std::uint32_t p, unsigned d, unsigned truncation, unsigned i);

    std::uint32_t prime() const { return p_; }
    unsigned rank() const { return d_; }
    unsigned truncation() const { return n_; }

    fp::Residue coeff(std::span<unsigned const> monomial) const;
    void set_coeff(std::span<unsigned const> monomial, fp::Residue value);
    fp::Residue constant() const { return coeffs_[0]; }

    TruncatedSeries operator*(TruncatedSeries const & o) const;
    TruncatedSeries operator+(TruncatedSeries const & o) const;
    TruncatedSeries operator-(TruncatedSeries const & o) const;
    TruncatedSeries scaled(fp::Residue c) const;
    TruncatedSeries inverse() const;
    TruncatedSeries pow(std::int64_t e) const;

    /* Smallest k >= 1 with a non-zero degree-k term, nullopt if none up to N. */
    std::optional<unsigned> lowest_nonconstant_degree() const;
    /* Coefficients of the d^k monomials of length k, lexicographic. */
    fp::Vec homogeneous_component(unsigned k) const;
    /* Non-zero terms as (variable indices, coefficient), graded-lex order. */
    std::vector<std::pair<std::vector<unsigned>, fp::Residue>> terms() const;

    std::string key() const;
    static TruncatedSeries from_key(std::uint32_t p, unsigned d, unsigned truncation,
                                    std::string const & key);

    bool operator==(TruncatedSeries const & o) const = default;
};

TruncatedSeries expand(Word const & w, std::uint32_t p, unsigned truncation);

/* Level of w, or nullopt for "at least truncation + 1" (including the identity). */
std::optional<unsigned> level(Word const & w, std::uint32_t p, unsigned truncation);

/*
 * Coordinates of w modulo F_4 in the basis [x,y,x], [x,y,y] (plus x^3, y^3
 * when p = 3).  e1 and e2 are the x^3 and y^3 exponents and stay zero for
 * p != 3.
 */
struct Deg3Coefficients {
    fp::Residue a = 0;  /* [x,y,x] */
    fp::Residue b = 0;  /* [x,y,y] */
    fp::Residue e1 = 0; /* x^3 */
    fp::Residue e2 = 0; /* y^3 */

    bool is_zero() const { return a == 0 && b == 0 && e1 == 0 && e2 == 0; }
    bool operator==(Deg3Coefficients const &) const = default;
};

Deg3Coefficients deg3_coefficients(Word const & w, std::uint32_t p);

/*
 * Coefficient realization of the Massey-product traces of two relations:
 * rows (a_i, b_i).  For p = 3 the (e1, e2) rows are reported alongside.
 */
struct MasseyTraceData {
    std::uint32_t p;
    std::array<std::array<fp::Residue, 2>, 2> matrix;
    std::array<std::array<fp::Residue, 2>, 2> cube_exponents; /* meaningful for p = 3 */

    fp::Residue determinant() const;
    bool invertible() const { return determinant() != 0; }
    bool is_zero() const;
};

MasseyTraceData massey_trace_matrix(Word const & rho1, Word const & rho2, std::uint32_t p);

/*
 * r_k by greedy graded elimination of leading terms.  This does not form
 * normal closures, so it can over-count relative to a minimal normal
 * generating set; `approximate` records that.
 */
struct LevelProfile {
    std::map<unsigned, unsigned> counts;
    unsigned beyond = 0;     /* relations of level >= truncation + 1 */
    unsigned truncation = 0;
    bool approximate = true;

    unsigned total() const;
};

LevelProfile level_profile(std::span<Word const> relations, std::uint32_t p, unsigned truncation);

/* Even levels with a non-zero count; these cannot occur for p-tower groups. */
std::vector<unsigned> koch_venkov_violations(LevelProfile const & profile);

/* c^(p^j) for every left-normed commutator c of weight i with i p^j = n. */
std::vector<Word> graded_generators(std::uint32_t p, unsigned d, unsigned n);

/* dim_{F_p} F_n / F_{n+1} from the degree-n leading terms of graded_generators. */
unsigned free_dimension_factor(std::uint32_t p, unsigned d, unsigned n);
unsigned free_dimension_factor_deg3(std::uint32_t p, unsigned d = 2);

/*
 * The finite p-group F / F_c as a multiplication table, with the map from
 * words to table indices.  Elements are the distinct truncated expansions.
 */
class FreeQuotient
{
    std::uint32_t p_;
    unsigned d_;
    unsigned c_;
    std::unordered_map<std::string, groupcore::Elem> index_;
    std::optional<groupcore::GroupTable> table_;

    public:

    FreeQuotient(std::uint32_t p, unsigned d, unsigned c, Exec exec = Exec::parallel,
                 std::size_t max_order = 4096);

    groupcore::GroupTable const & table() const { return *table_; }
    unsigned nilpotency_bound() const { return c_; }
    groupcore::Elem image(Word const & w) const;
};

} // namespace ptower::magnus

#endif /* PTOWER_MAGNUS_HPP */
