#ifndef PTOWER_TOWERDECIDE_HPP
#define PTOWER_TOWERDECIDE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ptower/bigint.hpp"
#include "ptower/exec.hpp"
#include "ptower/magnus.hpp"

/*
 * Decision procedure for the length of the p-class field tower of an
 * imaginary quadratic field, p odd.  Unconditional rules come first; the
 * conjectural branch only runs when the (3,3) conjecture is assumed and
 * every verdict it produces says so in `assumptions`.
 */
namespace ptower::towerdecide {

enum class Status {
    finite_length,
    infinite,
    conjecturally_finite,
    conjecturally_infinite,
    undecided,
};

/* "FiniteLength", "Infinite", ... */
char const * status_name(Status s);

inline constexpr char const * kConjecture33 = "(3,3) conjecture";

struct TowerVerdict {
    Status status = Status::undecided;
    std::optional<unsigned> length; /* only for finite_length */
    std::vector<std::string> justification;
    std::vector<std::string> assumptions;
    std::vector<std::string> notes;
};

struct TowerInput {
    BigInt D;
    std::uint32_t p = 3;
    std::optional<std::pair<magnus::Word, magnus::Word>> relations;
    std::optional<std::int64_t> dim_g3_g4;
    bool assume_33 = false;
};

/* The rank rules alone: 0 -> length 0, 1 -> length 1, 2 -> undecided, >= 3 -> infinite. */
TowerVerdict verdict_from_rank(unsigned rank, std::uint32_t p);

/* EvenPrime, NotPrime, BadDiscriminant */
TowerVerdict rank_verdict(BigInt const & D, std::uint32_t p, Exec exec = Exec::parallel);

/* Infinite when both relations vanish modulo F_4 (and their cube parts for p = 3). */
TowerVerdict massey_vanishing_criterion(magnus::Word const & rho1, magnus::Word const & rho2,
                                        std::uint32_t p);

/* Invertibility of [[a1,b1],[a2,b2]]; needs p > 3 and the (3,3) conjecture. */
TowerVerdict conjectural_matrix_decision(magnus::Word const & rho1, magnus::Word const & rho2,
                                         std::uint32_t p, bool assume_33);

/* p = 3: 2 finite, 3 infinite; p >= 5: 0 finite, 1 infinite; anything else is an error. */
TowerVerdict conjectural_g4_decision(std::int64_t dim_g3_g4, std::uint32_t p, bool assume_33);

/* Shafarevich: a p-tower group over an imaginary quadratic field has r = d for odd p. */
void check_relation_count(unsigned generators, unsigned relations, std::uint32_t p);

/* Known results from the literature, attached as notes only. */
std::vector<std::string> literature_notes(BigInt const & D, std::uint32_t p);

TowerVerdict decide(TowerInput const & input, Exec exec = Exec::parallel);

} // namespace ptower::towerdecide

#endif /* PTOWER_TOWERDECIDE_HPP */
