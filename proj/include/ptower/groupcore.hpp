#ifndef PTOWER_GROUPCORE_HPP
#define PTOWER_GROUPCORE_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ptower/exec.hpp"
#include "ptower/fp_linalg.hpp"

/*
 * Finite p-groups given by full multiplication tables, their group algebras
 * over F_p, and the filtrations that are compared against each other: the
 * dimension subgroups computed from powers of the augmentation ideal, and the
 * same subgroups assembled from the lower central series and p-th powers.
 */
namespace ptower::groupcore {

using Elem = std::uint32_t;

/*
 * standard: exhaustive associativity check up to order 256, 10 n^2 sampled
 * triples above that.
 */
enum class Validation { standard, full, none };

class GroupTable
{
    std::uint32_t p_;
    std::size_t n_;
    std::vector<Elem> table_;
    std::vector<Elem> inverse_;

    public:

    /* Raises GroupAxiomError naming the failed axiom. */
    GroupTable(std::uint32_t p, std::size_t order, std::vector<Elem> flat_table,
               Validation validation = Validation::standard, Exec exec = Exec::parallel);

    std::uint32_t prime() const { return p_; }
    std::size_t order() const { return n_; }

    Elem mul(Elem a, Elem b) const { return table_[a * n_ + b]; }
    Elem inv(Elem a) const { return inverse_[a]; }
    Elem pow(Elem a, std::uint64_t e) const;
    /* [a,b] = a^-1 b^-1 a b */
    Elem commutator(Elem a, Elem b) const { return mul(mul(inv(a), inv(b)), mul(a, b)); }
    Elem conjugate(Elem a, Elem by) const { return mul(mul(inv(by), a), by); }
    unsigned element_order(Elem a) const;

    std::span<Elem const> row(Elem a) const { return {table_.data() + a * n_, n_}; }
    std::vector<Elem> const & flat() const { return table_; }

    /* log_p of the order */
    unsigned log_order() const;
};

/* First failing triple of (ab)c != a(bc), scanning a, then b, then c. */
std::optional<std::array<Elem, 3>> find_nonassociative_triple(std::span<Elem const> table,
                                                              std::size_t n, Exec exec);
/* Same test on `samples` pseudo-random triples drawn from a fixed seed. */
std::optional<std::array<Elem, 3>> find_nonassociative_sample(std::span<Elem const> table,
                                                              std::size_t n,
                                                              std::uint64_t samples, Exec exec);

class Subgroup
{
    std::vector<Elem> elements_; /* sorted */
    std::vector<std::uint8_t> mask_;

    public:

    Subgroup(std::size_t group_order, std::vector<Elem> sorted_elements);

    std::size_t size() const { return elements_.size(); }
    std::vector<Elem> const & elements() const { return elements_; }
    bool contains(Elem g) const { return mask_[g] != 0; }
    bool is_trivial() const { return elements_.size() == 1; }

    bool operator==(Subgroup const & o) const { return elements_ == o.elements_; }
    bool includes(Subgroup const & o) const;
};

/* Incremental closure of a generating set; every intermediate state is a subgroup. */
class SubgroupBuilder
{
    GroupTable const & g_;
    std::vector<Elem> elements_;
    std::vector<Elem> gens_;
    std::vector<std::uint8_t> mask_;

    void push(Elem x);

    public:

    explicit SubgroupBuilder(GroupTable const & g);

    void add_generator(Elem x);
    bool contains(Elem x) const { return mask_[x] != 0; }
    std::size_t size() const { return elements_.size(); }
    std::vector<Elem> const & generators() const { return gens_; }
    Subgroup build() const;
};

Subgroup whole_group(GroupTable const & g);
Subgroup trivial_subgroup(GroupTable const & g);
Subgroup generated_subgroup(GroupTable const & g, std::span<Elem const> gens);
bool is_normal(GroupTable const & g, Subgroup const & h);

/* Join of normal subgroups; raises InternalError if an input is not normal. */
Subgroup join_normal(GroupTable const & g, std::span<Subgroup const> parts);

/* A generating set chosen greedily by increasing element index. */
std::vector<Elem> generating_set(GroupTable const & g);
unsigned exponent(GroupTable const & g);

/* {x : sum of coefficients = 0}, basis g - 1 in echelon form. */
fp::Subspace augmentation_ideal(GroupTable const & g);

/*
 * [I, I^2, ..., I^m] with I^m = 0.  I^{k+1} is spanned by u(s - 1) for u in
 * a basis of I^k and s in a generating set of G, which spans the same space
 * as all products u v with v in I because I^k is a two-sided ideal.
 */
std::vector<fp::Subspace> ideal_powers(GroupTable const & g);
fp::Subspace ideal_power(GroupTable const & g, unsigned n);

/* G_n = { g : g - 1 in I^n } */
Subgroup dimension_subgroup_oracle(GroupTable const & g, unsigned n);
std::vector<Subgroup> dimension_series_oracle(GroupTable const & g);

/* [gamma_1, gamma_2, ...] ending at the first repeated term. */
std::vector<Subgroup> lower_central_series(GroupTable const & g);

/* [A, B] generated by commutators a^-1 b^-1 a b */
Subgroup commutator_subgroup(GroupTable const & g, Subgroup const & a, Subgroup const & b);

/* <h^q : h in H> */
Subgroup power_subgroup(GroupTable const & g, Subgroup const & h, std::uint64_t q);

enum class LazardPairs {
    minimal, /* for each p^j only the smallest admissible i */
    all,     /* every (i, j) with i <= class + 1 and p^j <= exponent */
};

/* G_n = prod_{i p^j >= n} gamma_i(G)^(p^j) */
Subgroup dimension_subgroup_lazard(GroupTable const & g, unsigned n,
                                   LazardPairs pairs = LazardPairs::minimal);

/* [G_1, G_2, ...] through the first trivial term. */
std::vector<Subgroup> dimension_series_lazard(GroupTable const & g);

/* log_p |G_n / G_{n+1}| for n = 1 .. until G_n is trivial */
std::vector<unsigned> dimension_factors(GroupTable const & g);

unsigned dim_g3_mod_g4(GroupTable const & g);

/* log_p of a subgroup index; InternalError when it is not a p-power */
unsigned log_p_index(std::uint32_t p, std::size_t big, std::size_t small);

} // namespace ptower::groupcore

#endif /* PTOWER_GROUPCORE_HPP */
