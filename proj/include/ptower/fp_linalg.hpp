#ifndef PTOWER_FP_LINALG_HPP
#define PTOWER_FP_LINALG_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace ptower::fp {

using Residue = std::uint32_t;
using Vec = std::vector<Residue>;

/* Trial division; adequate for the primes this toolkit ever sees. */
bool is_prime(std::uint64_t n);

Residue residue(std::int64_t v, std::uint32_t p);
Residue inverse(Residue a, std::uint32_t p);

inline Residue add(Residue a, Residue b, std::uint32_t p) { return (a + b) % p; }
inline Residue sub(Residue a, Residue b, std::uint32_t p) { return (a + p - b) % p; }
inline Residue mul(Residue a, Residue b, std::uint32_t p)
{
    return static_cast<Residue>((std::uint64_t{a} * b) % p);
}

bool is_zero(Vec const & v);

/*
 * A subspace of F_p^n stored as its reduced row echelon basis.  Rows are
 * kept sorted by pivot column, pivots are 1 and every pivot column is zero
 * in all other rows, so two subspaces are equal iff their bases are equal.
 */
class Subspace
{
    std::uint32_t p_;
    std::size_t ncols_;
    std::vector<Vec> rows_;
    std::vector<std::size_t> pivots_;

    public:

    Subspace(std::uint32_t p, std::size_t ncols) : p_(p), ncols_(ncols) {}

    std::uint32_t prime() const { return p_; }
    std::size_t ambient_dim() const { return ncols_; }
    std::size_t dim() const { return rows_.size(); }
    std::vector<Vec> const & basis() const { return rows_; }
    std::vector<std::size_t> const & pivots() const { return pivots_; }

    /* Returns true when v was independent of the current basis. */
    bool insert(Vec v);

    Vec reduce(Vec v) const;
    bool contains(Vec const & v) const { return is_zero(reduce(v)); }
    bool contains(Subspace const & other) const;

    bool operator==(Subspace const & o) const
    {
        return p_ == o.p_ && ncols_ == o.ncols_ && rows_ == o.rows_;
    }
};

std::size_t rank(std::span<Vec const> vectors, std::uint32_t p);

/*
 * Coefficients c with sum_k c_k columns[k] == target, or nullopt when
 * target is outside their span.  The columns must be independent; a
 * dependent set raises InternalError since the answer would not be unique.
 */
std::optional<Vec> solve_unique(std::span<Vec const> columns, Vec const & target,
                                std::uint32_t p);

Residue determinant(std::vector<Vec> m, std::uint32_t p);

} // namespace ptower::fp

#endif /* PTOWER_FP_LINALG_HPP */
