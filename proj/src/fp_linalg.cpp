#include "ptower/fp_linalg.hpp"

#include <algorithm>
#include <tuple>
#include <utility>

#include "ptower/error.hpp"

namespace ptower::fp {

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t q = 2; q * q <= n; ++q)
        if (n % q == 0)
            return false;
    return true;
}

Residue residue(std::int64_t v, std::uint32_t p)
{
    std::int64_t r = v % static_cast<std::int64_t>(p);
    if (r < 0)
        r += p;
    return static_cast<Residue>(r);
}

Residue inverse(Residue a, std::uint32_t p)
{
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p, new_r = a % p;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
        std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
    }
    if (r != 1)
        fail(ErrorKind::InternalError, "inverse of a non-unit modulo p");
    return residue(t, p);
}

bool is_zero(Vec const & v)
{
    return std::all_of(v.begin(), v.end(), [](Residue x) { return x == 0; });
}

static void axpy(Vec & y, Residue a, Vec const & x, std::uint32_t p)
{
    /* y -= a*x */
    for (std::size_t i = 0; i < y.size(); ++i)
        if (x[i] != 0)
            y[i] = sub(y[i], mul(a, x[i], p), p);
}

Vec Subspace::reduce(Vec v) const
{
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        Residue c = v[pivots_[k]];
        if (c != 0)
            axpy(v, c, rows_[k], p_);
    }
    return v;
}

bool Subspace::insert(Vec v)
{
    if (v.size() != ncols_)
        fail(ErrorKind::InternalError, "vector length does not match subspace");
    v = reduce(std::move(v));
    auto it = std::find_if(v.begin(), v.end(), [](Residue x) { return x != 0; });
    if (it == v.end())
        return false;
    std::size_t col = static_cast<std::size_t>(it - v.begin());
    Residue s = inverse(*it, p_);
    for (auto & x : v)
        x = mul(x, s, p_);
    for (auto & row : rows_)
        if (row[col] != 0)
            axpy(row, row[col], v, p_);
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), col);
    auto k = pos - pivots_.begin();
    pivots_.insert(pos, col);
    rows_.insert(rows_.begin() + k, std::move(v));
    return true;
}

bool Subspace::contains(Subspace const & other) const
{
    return std::all_of(other.rows_.begin(), other.rows_.end(),
                       [this](Vec const & r) { return contains(r); });
}

std::size_t rank(std::span<Vec const> vectors, std::uint32_t p)
{
    if (vectors.empty())
        return 0;
    Subspace s(p, vectors.front().size());
    for (auto const & v : vectors)
        s.insert(v);
    return s.dim();
}

std::optional<Vec> solve_unique(std::span<Vec const> columns, Vec const & target,
                                std::uint32_t p)
{
    std::size_t k = columns.size();
    std::size_t m = target.size();
    /* augmented matrix, one row per coordinate */
    std::vector<Vec> a(m, Vec(k + 1, 0));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < k; ++j)
            a[i][j] = columns[j][i] % p;
        a[i][k] = target[i] % p;
    }
    std::size_t row = 0;
    std::vector<std::size_t> pivot_cols;
    for (std::size_t col = 0; col < k && row < m; ++col) {
        std::size_t sel = row;
        while (sel < m && a[sel][col] == 0)
            ++sel;
        if (sel == m)
            continue;
        std::swap(a[row], a[sel]);
        Residue s = inverse(a[row][col], p);
        for (auto & x : a[row])
            x = mul(x, s, p);
        for (std::size_t i = 0; i < m; ++i)
            if (i != row && a[i][col] != 0)
                axpy(a[i], a[i][col], a[row], p);
        pivot_cols.push_back(col);
        ++row;
    }
    if (pivot_cols.size() != k)
        fail(ErrorKind::InternalError, "solve_unique: dependent columns");
    for (std::size_t i = row; i < m; ++i)
        if (a[i][k] != 0)
            return std::nullopt;
    Vec x(k, 0);
    for (std::size_t r = 0; r < k; ++r)
        x[pivot_cols[r]] = a[r][k];
    return x;
}

Residue determinant(std::vector<Vec> m, std::uint32_t p)
{
    std::size_t n = m.size();
    for (auto & row : m)
        for (auto & x : row)
            x %= p;
    Residue det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t sel = col;
        while (sel < n && m[sel][col] == 0)
            ++sel;
        if (sel == n)
            return 0;
        if (sel != col) {
            std::swap(m[sel], m[col]);
            det = sub(0, det, p);
        }
        Residue pivot = m[col][col];
        det = mul(det, pivot, p);
        Residue s = inverse(pivot, p);
        for (std::size_t i = col + 1; i < n; ++i) {
            Residue f = mul(m[i][col], s, p);
            if (f != 0)
                axpy(m[i], f, m[col], p);
        }
    }
    return det;
}

} // namespace ptower::fp
