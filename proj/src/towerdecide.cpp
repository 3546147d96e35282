#include "ptower/towerdecide.hpp"

#include <algorithm>
#include <string>

#include "ptower/error.hpp"
#include "ptower/fp_linalg.hpp"
#include "ptower/gsineq.hpp"
#include "ptower/quadforms.hpp"

namespace ptower::towerdecide {

namespace {

void check_odd_prime(std::uint32_t p)
{
    if (!fp::is_prime(p))
        fail(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
    if (p == 2)
        fail(ErrorKind::EvenPrime, "p = 2 is outside the scope of the odd-p decision procedure");
}

std::string rank_text(unsigned rank, std::uint32_t p)
{
    return "d_" + std::to_string(p) + " Cl(K) = " + std::to_string(rank);
}

void require_conjecture(bool assume_33, char const * what)
{
    if (!assume_33)
        fail(ErrorKind::ConjectureNotAssumed,
             std::string(what) + " is conditional on the (3,3) conjecture; pass --assume-33");
}

/* exponents a_1 <= a_2 <= ... of the p-part of an abelian group */
std::vector<unsigned> p_part_exponents(quadforms::AbelianStructure const & s, std::uint32_t p)
{
    std::vector<unsigned> out;
    for (auto n : s.elementary_divisors) {
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e > 0)
            out.push_back(e);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

char const * status_name(Status s)
{
    switch (s) {
    case Status::finite_length: return "FiniteLength";
    case Status::infinite: return "Infinite";
    case Status::conjecturally_finite: return "ConjecturallyFinite";
    case Status::conjecturally_infinite: return "ConjecturallyInfinite";
    case Status::undecided: return "Undecided";
    }
    return "Undecided";
}

TowerVerdict verdict_from_rank(unsigned rank, std::uint32_t p)
{
    TowerVerdict v;
    std::string r = rank_text(rank, p);
    switch (rank) {
    case 0:
        v.status = Status::finite_length;
        v.length = 0;
        v.justification.push_back(r + ": p does not divide the class number, so K is its own Hilbert p-class field");
        break;
    case 1:
        v.status = Status::finite_length;
        v.length = 1;
        v.justification.push_back(r + ": the tower group has cyclic abelianization, so it is cyclic "
                                      "(Burnside basis theorem) and the tower stops after one step");
        break;
    case 2:
        v.status = Status::undecided;
        v.justification.push_back(r + ": the rank rules do not decide the tower length");
        break;
    default: {
        /* r = d and every relation at level >= 3, so finiteness needs d > 4 d^3 / 27 */
        Rational bound = gsineq::medium_bound(rank, 3);
        std::string bound_text = bound.get_den() == 1 ? bound.get_num().get_str() : to_string(bound);
        if (!gsineq::medium_contradiction(rank, BigInt(rank), 3))
            fail(ErrorKind::InternalError, "medium-strength bound failed to exclude rank " + std::to_string(rank));
        v.status = Status::infinite;
        v.justification.push_back(r + " >= 3: Golod-Shafarevich with r = d and relations of level >= 3 "
                                      "requires r > 4d^3/27 = " + bound_text + ", which fails");
        break;
    }
    }
    return v;
}

TowerVerdict rank_verdict(BigInt const & D, std::uint32_t p, Exec exec)
{
    check_odd_prime(p);
    if (!quadforms::is_fundamental_discriminant(D))
        fail(ErrorKind::BadDiscriminant, D.get_str() + " is not a negative fundamental discriminant");
    return verdict_from_rank(quadforms::p_rank(D, p, exec), p);
}

TowerVerdict massey_vanishing_criterion(magnus::Word const & rho1, magnus::Word const & rho2,
                                        std::uint32_t p)
{
    check_odd_prime(p);
    auto c1 = magnus::deg3_coefficients(rho1, p);
    auto c2 = magnus::deg3_coefficients(rho2, p);

    TowerVerdict v;
    if (!c1.is_zero() || !c2.is_zero()) {
        v.status = Status::undecided;
        v.justification.push_back(p == 3 ? "Massey vanishing: some degree-3 coefficient (a, b, or cube exponent) is non-zero"
                                         : "Massey vanishing: some degree-3 coefficient (a, b) is non-zero");
        return v;
    }

    /* both relations in F_4, hence in F_5 by parity: Z(t) <= 2t^5 - 2t + 1 */
    gsineq::ZassenhausPolynomial z(2, {{5, BigInt(2)}});
    auto report = gsineq::gs_contradiction(z);
    if (!report.has_nonpositive_point || !report.witness)
        fail(ErrorKind::InternalError, "2t^5 - 2t + 1 should have a non-positive point on (0,1)");
    v.status = Status::infinite;
    v.justification.push_back(
        "Massey vanishing: both relations vanish modulo F_4, so by Koch-Venkov parity they lie in F_5; "
        "Golod-Shafarevich fails since 2t^5 - 2t + 1 = " + to_string(*report.value) +
        " at t = " + to_string(*report.witness));
    return v;
}

TowerVerdict conjectural_matrix_decision(magnus::Word const & rho1, magnus::Word const & rho2,
                                         std::uint32_t p, bool assume_33)
{
    check_odd_prime(p);
    if (p <= 3)
        fail(ErrorKind::PrimeTooSmall, "the matrix criterion needs p > 3");
    require_conjecture(assume_33, "the matrix criterion");

    auto m = magnus::massey_trace_matrix(rho1, rho2, p);
    TowerVerdict v;
    v.assumptions.push_back(kConjecture33);
    std::string det = std::to_string(m.determinant());
    if (m.invertible()) {
        v.status = Status::conjecturally_finite;
        v.justification.push_back("matrix criterion: det [[a1,b1],[a2,b2]] = " + det +
                                  " != 0 mod " + std::to_string(p) + ", type (3,3)");
    } else {
        v.status = Status::conjecturally_infinite;
        v.justification.push_back("matrix criterion: det [[a1,b1],[a2,b2]] = 0 mod " +
                                  std::to_string(p) + ", type is not (3,3)");
    }
    v.notes.push_back("the [x,y,y] column stands in for the trace of <chi2,chi2,chi1>; "
                      "rescaling a column by a unit does not change invertibility");
    return v;
}

TowerVerdict conjectural_g4_decision(std::int64_t dim_g3_g4, std::uint32_t p, bool assume_33)
{
    check_odd_prime(p);
    std::int64_t finite_value = p == 3 ? 2 : 0;
    std::int64_t infinite_value = finite_value + 1;
    if (dim_g3_g4 != finite_value && dim_g3_g4 != infinite_value)
        fail(ErrorKind::InconsistentDimension,
             "dim G_3/G_4 = " + std::to_string(dim_g3_g4) + " is impossible for p = " + std::to_string(p) +
             " (expected " + std::to_string(finite_value) + " or " + std::to_string(infinite_value) + ")");
    require_conjecture(assume_33, "the G_3/G_4 criterion");

    TowerVerdict v;
    v.assumptions.push_back(kConjecture33);
    std::string text = "G_3/G_4 criterion: dim G_3/G_4 = " + std::to_string(dim_g3_g4) +
                       " for p = " + std::to_string(p);
    if (dim_g3_g4 == finite_value) {
        v.status = Status::conjecturally_finite;
        v.justification.push_back(text + ", type (3,3)");
    } else {
        v.status = Status::conjecturally_infinite;
        v.justification.push_back(text + ", type is not (3,3)");
    }
    return v;
}

void check_relation_count(unsigned generators, unsigned relations, std::uint32_t p)
{
    if (p != 2 && generators != relations)
        fail(ErrorKind::ConsistencyError,
             std::to_string(relations) + " relations for " + std::to_string(generators) +
             " generators; p-tower groups of imaginary quadratic fields have r = d for odd p");
}

std::vector<std::string> literature_notes(BigInt const & D, std::uint32_t p)
{
    std::vector<std::string> notes;
    if (D == -3299 && p == 3)
        notes.push_back("Scholz-Taussky: the 3-class field tower of Q(sqrt(-3299)) has length 2");
    if (D == -3321607 && p == 3)
        notes.push_back("literature: Q(sqrt(-3321607)) has an infinite 3-class field tower");
    if (D == BigInt("-222637549223") && p == 5)
        notes.push_back("literature: Q(sqrt(-222637549223)) has an infinite 5-class field tower");
    return notes;
}

TowerVerdict decide(TowerInput const & input, Exec exec)
{
    std::uint32_t p = input.p;
    check_odd_prime(p);
    if (!quadforms::is_fundamental_discriminant(input.D))
        fail(ErrorKind::BadDiscriminant, input.D.get_str() + " is not a negative fundamental discriminant");

    auto forms = quadforms::enumerate_reduced_forms(input.D, exec);
    unsigned rank = quadforms::p_rank_of(forms, p, exec);
    TowerVerdict v = verdict_from_rank(rank, p);
    v.notes = literature_notes(input.D, p);

    if (input.relations) {
        auto const & [rho1, rho2] = *input.relations;
        if (rho1.rank() != rho2.rank())
            fail(ErrorKind::ConsistencyError, "relations use different generator counts");
        check_relation_count(rank, 2, p);
        check_relation_count(rho1.rank(), 2, p);
    }

    if (v.status != Status::undecided)
        return v;

    if (p > 7) {
        auto exps = p_part_exponents(quadforms::structure_of(forms, exec), p);
        if (exps.size() == 2)
            v.notes.push_back("if the tower group has Zassenhaus type (3,7) then its order is at least p^" +
                              std::to_string(21 + exps[0] + exps[1]));
    }

    auto absorb = [&](TowerVerdict const & step) {
        v.status = step.status;
        v.length = step.length;
        v.justification.insert(v.justification.end(), step.justification.begin(), step.justification.end());
        v.assumptions.insert(v.assumptions.end(), step.assumptions.begin(), step.assumptions.end());
        v.notes.insert(v.notes.end(), step.notes.begin(), step.notes.end());
    };

    if (input.relations) {
        auto const & [rho1, rho2] = *input.relations;
        absorb(massey_vanishing_criterion(rho1, rho2, p));
        if (v.status != Status::undecided)
            return v;
    }

    if (!input.assume_33) {
        if (input.dim_g3_g4 || input.relations)
            v.notes.push_back("conjectural criteria skipped: the (3,3) conjecture was not assumed");
        return v;
    }

    std::optional<TowerVerdict> by_matrix, by_g4;
    if (input.relations) {
        if (p > 3)
            by_matrix = conjectural_matrix_decision(input.relations->first, input.relations->second, p, true);
        else
            v.notes.push_back("matrix criterion skipped: it needs p > 3");
    }
    if (input.dim_g3_g4)
        by_g4 = conjectural_g4_decision(*input.dim_g3_g4, p, true);

    if (by_matrix && by_g4 && by_matrix->status != by_g4->status)
        fail(ErrorKind::ConsistencyError, "matrix and G_3/G_4 criteria disagree on the supplied data");
    if (by_matrix)
        absorb(*by_matrix);
    if (by_g4) {
        if (by_matrix)
            v.justification.insert(v.justification.end(), by_g4->justification.begin(),
                                   by_g4->justification.end());
        else
            absorb(*by_g4);
    }
    return v;
}

} // namespace ptower::towerdecide
