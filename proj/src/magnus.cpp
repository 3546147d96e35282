#include "ptower/magnus.hpp"

#include <algorithm>
#include <string>

#include "ptower/cayley.hpp"
#include "ptower/error.hpp"

namespace ptower::magnus {

// --- words -----------------------------------------------------------------

Word::Word(unsigned rank, std::vector<Letter> letters)
    : rank_(rank), letters_(std::move(letters))
{
    for (auto const & l : letters_)
        if (l.gen == 0 || l.gen > rank_)
            fail(ErrorKind::InvalidArgument, "generator index " + std::to_string(l.gen) +
                                                 " outside rank " + std::to_string(rank_));
    reduce();
}

void Word::reduce()
{
    std::vector<Letter> out;
    out.reserve(letters_.size());
    for (auto const & l : letters_) {
        if (l.exp == 0)
            continue;
        if (!out.empty() && out.back().gen == l.gen) {
            out.back().exp += l.exp;
            if (out.back().exp == 0)
                out.pop_back();
        } else {
            out.push_back(l);
        }
    }
    letters_ = std::move(out);
}

Word Word::generator(unsigned rank, unsigned i, std::int64_t exp)
{
    return Word(rank, {{i, exp}});
}

Word Word::operator*(Word const & o) const
{
    std::vector<Letter> all = letters_;
    all.insert(all.end(), o.letters_.begin(), o.letters_.end());
    return Word(std::max(rank_, o.rank_), std::move(all));
}

Word Word::inverse() const
{
    std::vector<Letter> inv(letters_.rbegin(), letters_.rend());
    for (auto & l : inv)
        l.exp = -l.exp;
    return Word(rank_, std::move(inv));
}

Word Word::pow(std::int64_t e) const
{
    Word base = e < 0 ? inverse() : *this;
    std::uint64_t k = e < 0 ? std::uint64_t(-e) : std::uint64_t(e);
    Word result(rank_);
    while (k > 0) {
        if (k & 1)
            result = result * base;
        k >>= 1;
        if (k > 0)
            base = base * base;
    }
    return result;
}

Word commutator(Word const & u, Word const & v)
{
    return u.inverse() * v.inverse() * u * v;
}

Word left_normed(std::span<Word const> parts)
{
    if (parts.empty())
        fail(ErrorKind::InvalidArgument, "empty commutator");
    Word acc = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i)
        acc = commutator(acc, parts[i]);
    return acc;
}

// --- truncated series ------------------------------------------------------

TruncatedSeries::TruncatedSeries(std::uint32_t p, unsigned d, unsigned truncation)
    : p_(p), d_(d), n_(truncation)
{
    if (d_ == 0)
        fail(ErrorKind::InvalidArgument, "series over zero variables");
    std::size_t total = 0, w = 1;
    for (unsigned l = 0; l <= n_; ++l) {
        total += w;
        w *= d_;
        if (total > (std::size_t{1} << 24))
            fail(ErrorKind::InvalidArgument, "truncation too deep for this rank");
    }
    coeffs_.assign(total, 0);
}

std::size_t TruncatedSeries::width(unsigned len) const
{
    std::size_t w = 1;
    for (unsigned i = 0; i < len; ++i)
        w *= d_;
    return w;
}

std::size_t TruncatedSeries::offset(unsigned len) const
{
    std::size_t off = 0, w = 1;
    for (unsigned i = 0; i < len; ++i) {
        off += w;
        w *= d_;
    }
    return off;
}

TruncatedSeries TruncatedSeries::one(std::uint32_t p, unsigned d, unsigned truncation)
{
    TruncatedSeries s(p, d, truncation);
    s.coeffs_[0] = 1 % p;
    return s;
}

TruncatedSeries TruncatedSeries::variable(std::uint32_t p, unsigned d, unsigned truncation,
                                          unsigned i)
{
    TruncatedSeries s(p, d, truncation);
    if (truncation >= 1)
        s.coeffs_[1 + i] = 1;
    return s;
}

fp::Residue TruncatedSeries::coeff(std::span<unsigned const> monomial) const
{
    if (monomial.size() > n_)
        return 0;
    std::size_t idx = 0;
    for (unsigned v : monomial)
        idx = idx * d_ + v;
    return coeffs_[offset(unsigned(monomial.size())) + idx];
}

void TruncatedSeries::set_coeff(std::span<unsigned const> monomial, fp::Residue value)
{
    if (monomial.size() > n_)
        return;
    std::size_t idx = 0;
    for (unsigned v : monomial)
        idx = idx * d_ + v;
    coeffs_[offset(unsigned(monomial.size())) + idx] = value % p_;
}

static void check_compatible(TruncatedSeries const & a, TruncatedSeries const & b)
{
    if (a.prime() != b.prime() || a.rank() != b.rank() || a.truncation() != b.truncation())
        fail(ErrorKind::InvalidArgument, "series from different rings");
}

TruncatedSeries TruncatedSeries::operator*(TruncatedSeries const & o) const
{
    check_compatible(*this, o);
    std::vector<std::uint64_t> acc(coeffs_.size(), 0);
    for (unsigned l1 = 0; l1 <= n_; ++l1) {
        std::size_t off1 = offset(l1), w1 = width(l1);
        for (std::size_t i1 = 0; i1 < w1; ++i1) {
            std::uint64_t a = coeffs_[off1 + i1];
            if (a == 0)
                continue;
            for (unsigned l2 = 0; l1 + l2 <= n_; ++l2) {
                std::size_t off2 = offset(l2), w2 = width(l2);
                std::size_t base = offset(l1 + l2) + i1 * w2;
                for (std::size_t i2 = 0; i2 < w2; ++i2) {
                    std::uint64_t b = o.coeffs_[off2 + i2];
                    if (b != 0)
                        acc[base + i2] += a * b % p_;
                }
            }
        }
    }
    TruncatedSeries r(p_, d_, n_);
    for (std::size_t i = 0; i < acc.size(); ++i)
        r.coeffs_[i] = fp::Residue(acc[i] % p_);
    return r;
}

TruncatedSeries TruncatedSeries::operator+(TruncatedSeries const & o) const
{
    check_compatible(*this, o);
    TruncatedSeries r = *this;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        r.coeffs_[i] = fp::add(coeffs_[i], o.coeffs_[i], p_);
    return r;
}

TruncatedSeries TruncatedSeries::operator-(TruncatedSeries const & o) const
{
    check_compatible(*this, o);
    TruncatedSeries r = *this;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        r.coeffs_[i] = fp::sub(coeffs_[i], o.coeffs_[i], p_);
    return r;
}

TruncatedSeries TruncatedSeries::scaled(fp::Residue c) const
{
    TruncatedSeries r = *this;
    for (auto & x : r.coeffs_)
        x = fp::mul(x, c % p_, p_);
    return r;
}

TruncatedSeries TruncatedSeries::inverse() const
{
    if (coeffs_[0] == 0)
        fail(ErrorKind::InvalidArgument, "series with zero constant term is not invertible");
    /* s = c (1 + u)  =>  s^-1 = c^-1 sum_k (-u)^k */
    fp::Residue cinv = fp::inverse(coeffs_[0], p_);
    TruncatedSeries u = scaled(cinv);
    u.coeffs_[0] = 0;
    TruncatedSeries minus_u = u.scaled(p_ - 1);
    TruncatedSeries result = one(p_, d_, n_);
    TruncatedSeries term = one(p_, d_, n_);
    for (unsigned k = 1; k <= n_; ++k) {
        term = term * minus_u;
        result = result + term;
    }
    return result.scaled(cinv);
}

TruncatedSeries TruncatedSeries::pow(std::int64_t e) const
{
    TruncatedSeries base = e < 0 ? inverse() : *this;
    std::uint64_t k = e < 0 ? std::uint64_t(-e) : std::uint64_t(e);
    TruncatedSeries result = one(p_, d_, n_);
    while (k > 0) {
        if (k & 1)
            result = result * base;
        k >>= 1;
        if (k > 0)
            base = base * base;
    }
    return result;
}

std::optional<unsigned> TruncatedSeries::lowest_nonconstant_degree() const
{
    for (unsigned l = 1; l <= n_; ++l) {
        std::size_t off = offset(l), w = width(l);
        for (std::size_t i = 0; i < w; ++i)
            if (coeffs_[off + i] != 0)
                return l;
    }
    return std::nullopt;
}

fp::Vec TruncatedSeries::homogeneous_component(unsigned k) const
{
    if (k > n_)
        return fp::Vec(width(k), 0);
    auto first = coeffs_.begin() + std::ptrdiff_t(offset(k));
    return fp::Vec(first, first + std::ptrdiff_t(width(k)));
}

std::vector<std::pair<std::vector<unsigned>, fp::Residue>> TruncatedSeries::terms() const
{
    std::vector<std::pair<std::vector<unsigned>, fp::Residue>> out;
    for (unsigned l = 0; l <= n_; ++l) {
        std::size_t off = offset(l), w = width(l);
        for (std::size_t i = 0; i < w; ++i) {
            fp::Residue c = coeffs_[off + i];
            if (c == 0)
                continue;
            std::vector<unsigned> mono(l);
            std::size_t idx = i;
            for (unsigned k = l; k-- > 0;) {
                mono[k] = unsigned(idx % d_);
                idx /= d_;
            }
            out.emplace_back(std::move(mono), c);
        }
    }
    return out;
}

std::string TruncatedSeries::key() const
{
    std::string k(coeffs_.size() * sizeof(fp::Residue), '\0');
    std::copy_n(reinterpret_cast<char const *>(coeffs_.data()), k.size(), k.data());
    return k;
}

TruncatedSeries TruncatedSeries::from_key(std::uint32_t p, unsigned d, unsigned truncation,
                                          std::string const & key)
{
    TruncatedSeries s(p, d, truncation);
    if (key.size() != s.coeffs_.size() * sizeof(fp::Residue))
        fail(ErrorKind::InternalError, "series key has the wrong length");
    std::copy_n(key.data(), key.size(), reinterpret_cast<char *>(s.coeffs_.data()));
    return s;
}

// --- expansions and levels -------------------------------------------------

TruncatedSeries expand(Word const & w, std::uint32_t p, unsigned truncation)
{
    if (truncation == 0)
        fail(ErrorKind::InvalidArgument, "truncation degree must be at least 1");
    if (!fp::is_prime(p))
        fail(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
    unsigned d = w.rank();
    TruncatedSeries result = TruncatedSeries::one(p, d, truncation);
    std::vector<std::optional<TruncatedSeries>> gens(d);
    for (auto const & l : w.letters()) {
        auto & g = gens[l.gen - 1];
        if (!g)
            g = TruncatedSeries::one(p, d, truncation) +
                TruncatedSeries::variable(p, d, truncation, l.gen - 1);
        result = result * g->pow(l.exp);
    }
    return result;
}

std::optional<unsigned> level(Word const & w, std::uint32_t p, unsigned truncation)
{
    return expand(w, p, truncation).lowest_nonconstant_degree();
}

namespace {

Word gx(unsigned d = 2) { return Word::generator(d, 1); }
Word gy(unsigned d = 2) { return Word::generator(d, 2); }

/* basis of F_3/F_4 for d = 2, in the order (a, b, e1, e2) */
std::vector<Word> deg3_basis(std::uint32_t p)
{
    std::vector<Word> basis;
    std::array<Word, 3> xyx{gx(), gy(), gx()};
    std::array<Word, 3> xyy{gx(), gy(), gy()};
    basis.push_back(left_normed(xyx));
    basis.push_back(left_normed(xyy));
    if (p == 3) {
        basis.push_back(gx().pow(3));
        basis.push_back(gy().pow(3));
    }
    return basis;
}

} // namespace

Deg3Coefficients deg3_coefficients(Word const & w, std::uint32_t p)
{
    if (w.rank() != 2)
        fail(ErrorKind::RankUnsupported, "degree-3 coefficients need a rank-2 word");
    auto series = expand(w, p, 3);
    auto lvl = series.lowest_nonconstant_degree();
    if (lvl && *lvl < 3)
        fail(ErrorKind::LevelTooLow, "word has level " + std::to_string(*lvl) + " < 3");
    auto basis = deg3_basis(p);
    if (basis.size() != free_dimension_factor_deg3(p))
        fail(ErrorKind::InternalError, "degree-3 basis size disagrees with the free factor");
    std::vector<fp::Vec> columns;
    for (auto const & b : basis)
        columns.push_back(expand(b, p, 3).homogeneous_component(3));
    auto sol = fp::solve_unique(columns, series.homogeneous_component(3), p);
    if (!sol)
        fail(ErrorKind::InternalError, "degree-3 component outside the span of the basis");
    Deg3Coefficients out;
    out.a = (*sol)[0];
    out.b = (*sol)[1];
    if (p == 3) {
        out.e1 = (*sol)[2];
        out.e2 = (*sol)[3];
    }
    return out;
}

fp::Residue MasseyTraceData::determinant() const
{
    return fp::determinant({{matrix[0][0], matrix[0][1]}, {matrix[1][0], matrix[1][1]}}, p);
}

bool MasseyTraceData::is_zero() const
{
    for (auto const & row : matrix)
        for (auto x : row)
            if (x != 0)
                return false;
    if (p == 3)
        for (auto const & row : cube_exponents)
            for (auto x : row)
                if (x != 0)
                    return false;
    return true;
}

MasseyTraceData massey_trace_matrix(Word const & rho1, Word const & rho2, std::uint32_t p)
{
    if (p < 3)
        fail(ErrorKind::PrimeTooSmall, "Massey trace data needs an odd prime");
    MasseyTraceData out{p, {}, {}};
    std::array<Word const *, 2> rels{&rho1, &rho2};
    for (std::size_t i = 0; i < 2; ++i) {
        auto c = deg3_coefficients(*rels[i], p);
        out.matrix[i] = {c.a, c.b};
        out.cube_exponents[i] = {c.e1, c.e2};
    }
    return out;
}

// --- level profiles --------------------------------------------------------

unsigned LevelProfile::total() const
{
    unsigned t = beyond;
    for (auto const & [k, r] : counts)
        t += r;
    return t;
}

LevelProfile level_profile(std::span<Word const> relations, std::uint32_t p, unsigned truncation)
{
    if (relations.empty())
        fail(ErrorKind::EmptyInput, "level profile of an empty relation set");
    unsigned d = relations.front().rank();
    for (auto const & w : relations)
        if (w.rank() != d)
            fail(ErrorKind::InvalidArgument, "relations of different ranks");

    struct Rel {
        TruncatedSeries series;
        std::optional<unsigned> level;
        bool settled = false;
    };
    std::vector<Rel> rels;
    for (auto const & w : relations) {
        auto s = expand(w, p, truncation);
        auto l = s.lowest_nonconstant_degree();
        rels.push_back({std::move(s), l});
    }

    LevelProfile out;
    out.truncation = truncation;
    for (unsigned k = 1; k <= truncation; ++k) {
        std::vector<TruncatedSeries const *> pivots;
        std::vector<fp::Vec> leading;
        for (auto & r : rels) {
            if (r.settled || r.level != k)
                continue;
            fp::Vec lead = r.series.homogeneous_component(k);
            std::optional<fp::Vec> combo;
            if (!leading.empty())
                combo = fp::solve_unique(leading, lead, p);
            if (!combo) {
                r.settled = true;
                pivots.push_back(&r.series);
                leading.push_back(std::move(lead));
                ++out.counts[k];
                continue;
            }
            /* divide out the pivots so the degree-k part cancels */
            for (std::size_t j = 0; j < pivots.size(); ++j)
                if ((*combo)[j] != 0)
                    r.series = r.series * pivots[j]->pow(-std::int64_t((*combo)[j]));
            r.level = r.series.lowest_nonconstant_degree();
            if (r.level && *r.level <= k)
                fail(ErrorKind::InternalError, "leading-term elimination did not raise the level");
        }
    }
    for (auto const & r : rels)
        if (!r.settled)
            ++out.beyond;
    return out;
}

std::vector<unsigned> koch_venkov_violations(LevelProfile const & profile)
{
    std::vector<unsigned> out;
    for (auto const & [k, r] : profile.counts)
        if (k % 2 == 0 && r > 0)
            out.push_back(k);
    return out;
}

// --- free dimension factors ------------------------------------------------

std::vector<Word> graded_generators(std::uint32_t p, unsigned d, unsigned n)
{
    std::vector<Word> out;
    std::uint64_t q = 1;
    for (unsigned j = 0; q <= n; ++j, q *= p) {
        if (n % q != 0)
            continue;
        unsigned weight = unsigned(n / q);
        /* every generator sequence of this length, as a left-normed commutator */
        std::vector<unsigned> seq(weight, 1);
        for (;;) {
            if (weight == 1 || seq[0] != seq[1]) {
                std::vector<Word> parts;
                for (unsigned g : seq)
                    parts.push_back(Word::generator(d, g));
                out.push_back(left_normed(parts).pow(std::int64_t(q)));
            }
            unsigned pos = weight;
            while (pos > 0 && seq[pos - 1] == d)
                seq[--pos] = 1;
            if (pos == 0)
                break;
            ++seq[pos - 1];
        }
    }
    return out;
}

unsigned free_dimension_factor(std::uint32_t p, unsigned d, unsigned n)
{
    if (n == 0)
        fail(ErrorKind::InvalidArgument, "dimension factors start at n = 1");
    std::vector<fp::Vec> leading;
    for (auto const & w : graded_generators(p, d, n))
        leading.push_back(expand(w, p, n).homogeneous_component(n));
    return unsigned(fp::rank(leading, p));
}

unsigned free_dimension_factor_deg3(std::uint32_t p, unsigned d)
{
    if (d != 2)
        fail(ErrorKind::RankUnsupported, "only the rank-2 free group is supported");
    return free_dimension_factor(p, d, 3);
}

// --- free quotients --------------------------------------------------------

FreeQuotient::FreeQuotient(std::uint32_t p, unsigned d, unsigned c, Exec exec,
                           std::size_t max_order)
    : p_(p), d_(d), c_(c)
{
    if (c < 2)
        fail(ErrorKind::InvalidArgument, "F/F_c needs c >= 2");
    unsigned trunc = c - 1;
    std::vector<std::string> gens;
    for (unsigned i = 0; i < d; ++i)
        gens.push_back((TruncatedSeries::one(p, d, trunc) +
                        TruncatedSeries::variable(p, d, trunc, i))
                           .key());
    auto mul = [&](std::string const & a, std::string const & b) {
        return (TruncatedSeries::from_key(p, d, trunc, a) *
                TruncatedSeries::from_key(p, d, trunc, b))
            .key();
    };
    groupcore::CayleyGraph<std::string> graph(TruncatedSeries::one(p, d, trunc).key(), gens, mul,
                                              max_order);
    std::size_t n = graph.elements.size();
    auto flat = groupcore::fill_cayley_table(n, gens.size(), graph.parent, graph.via,
                                             graph.right_gen, exec);
    table_.emplace(p, n, std::move(flat), groupcore::Validation::standard, exec);
    index_ = std::move(graph.index);
}

groupcore::Elem FreeQuotient::image(Word const & w) const
{
    if (w.rank() != d_)
        fail(ErrorKind::InvalidArgument, "word rank does not match the free quotient");
    auto it = index_.find(expand(w, p_, c_ - 1).key());
    if (it == index_.end())
        fail(ErrorKind::InternalError, "word image missing from the free quotient");
    return it->second;
}

} // namespace ptower::magnus
