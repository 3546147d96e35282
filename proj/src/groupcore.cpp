#include "ptower/groupcore.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "ptower/error.hpp"

namespace ptower::groupcore {

namespace {

std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

constexpr std::uint64_t kSampleSeed = 0x70746f776572ULL;

[[noreturn]] void axiom(std::string const & what)
{
    fail(ErrorKind::GroupAxiomError, what);
}

bool is_power_of(std::size_t n, std::uint32_t p)
{
    while (n > 1 && n % p == 0)
        n /= p;
    return n == 1;
}

} // namespace

GroupTable::GroupTable(std::uint32_t p, std::size_t order, std::vector<Elem> flat_table,
                       Validation validation, Exec exec)
    : p_(p), n_(order), table_(std::move(flat_table))
{
    if (!fp::is_prime(p))
        fail(ErrorKind::NotPrime, "group prime " + std::to_string(p) + " is not prime");
    if (n_ == 0 || table_.size() != n_ * n_)
        axiom("table is not " + std::to_string(n_) + "x" + std::to_string(n_));
    if (!is_power_of(n_, p_))
        axiom("order " + std::to_string(n_) + " is not a power of " + std::to_string(p_));
    for (Elem x : table_)
        if (x >= n_)
            axiom("closure: entry " + std::to_string(x) + " out of range");
    for (Elem x = 0; x < n_; ++x)
        if (mul(0, x) != x || mul(x, 0) != x)
            axiom("identity: index 0 is not a two-sided identity");
    std::vector<std::uint8_t> seen(n_);
    for (Elem a = 0; a < n_; ++a) {
        std::fill(seen.begin(), seen.end(), 0);
        for (Elem b = 0; b < n_; ++b)
            if (seen[mul(a, b)]++)
                axiom("inverses: row " + std::to_string(a) + " is not a permutation");
        std::fill(seen.begin(), seen.end(), 0);
        for (Elem b = 0; b < n_; ++b)
            if (seen[mul(b, a)]++)
                axiom("inverses: column " + std::to_string(a) + " is not a permutation");
    }
    inverse_.assign(n_, 0);
    for (Elem a = 0; a < n_; ++a)
        for (Elem b = 0; b < n_; ++b)
            if (mul(a, b) == 0)
                inverse_[a] = b;

    std::optional<std::array<Elem, 3>> bad;
    if (validation == Validation::full || (validation == Validation::standard && n_ <= 256))
        bad = find_nonassociative_triple(table_, n_, exec);
    else if (validation == Validation::standard)
        bad = find_nonassociative_sample(table_, n_, 10 * n_ * n_, exec);
    if (bad)
        axiom("associativity fails at (" + std::to_string((*bad)[0]) + "," +
              std::to_string((*bad)[1]) + "," + std::to_string((*bad)[2]) + ")");
}

Elem GroupTable::pow(Elem a, std::uint64_t e) const
{
    Elem r = 0;
    while (e > 0) {
        if (e & 1)
            r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

unsigned GroupTable::element_order(Elem a) const
{
    unsigned k = 1;
    for (Elem x = a; x != 0; x = mul(x, a))
        ++k;
    return k;
}

unsigned GroupTable::log_order() const
{
    return log_p_index(p_, n_, 1);
}

std::optional<std::array<Elem, 3>> find_nonassociative_triple(std::span<Elem const> t,
                                                              std::size_t n, Exec exec)
{
    auto first_bad_b = [&](std::size_t a) -> std::optional<std::array<Elem, 3>> {
        for (std::size_t b = 0; b < n; ++b) {
            Elem ab = t[a * n + b];
            for (std::size_t c = 0; c < n; ++c)
                if (t[ab * n + c] != t[a * n + t[b * n + c]])
                    return std::array<Elem, 3>{Elem(a), Elem(b), Elem(c)};
        }
        return std::nullopt;
    };
    if (exec == Exec::serial) {
        for (std::size_t a = 0; a < n; ++a)
            if (auto bad = first_bad_b(a))
                return bad;
        return std::nullopt;
    }
    /* smallest failing a, so the report matches the serial scan */
    long first = std::numeric_limits<long>::max();
    auto sn = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic, 4) reduction(min : first)
    for (long a = 0; a < sn; ++a)
        if (a < first && first_bad_b(static_cast<std::size_t>(a)))
            first = a;
    if (first == std::numeric_limits<long>::max())
        return std::nullopt;
    return first_bad_b(static_cast<std::size_t>(first));
}

std::optional<std::array<Elem, 3>> find_nonassociative_sample(std::span<Elem const> t,
                                                              std::size_t n,
                                                              std::uint64_t samples, Exec exec)
{
    auto triple = [&](std::uint64_t i) {
        std::uint64_t h = kSampleSeed + 3 * i;
        return std::array<Elem, 3>{Elem(splitmix64(h) % n), Elem(splitmix64(h + 1) % n),
                                   Elem(splitmix64(h + 2) % n)};
    };
    auto bad = [&](std::array<Elem, 3> const & x) {
        return t[t[x[0] * n + x[1]] * n + x[2]] != t[x[0] * n + t[x[1] * n + x[2]]];
    };
    if (exec == Exec::serial) {
        for (std::uint64_t i = 0; i < samples; ++i)
            if (bad(triple(i)))
                return triple(i);
        return std::nullopt;
    }
    auto first = std::numeric_limits<long long>::max();
    auto sn = static_cast<long long>(samples);
#pragma omp parallel for schedule(static) reduction(min : first)
    for (long long i = 0; i < sn; ++i)
        if (i < first && bad(triple(static_cast<std::uint64_t>(i))))
            first = i;
    if (first == std::numeric_limits<long long>::max())
        return std::nullopt;
    return triple(static_cast<std::uint64_t>(first));
}

Subgroup::Subgroup(std::size_t group_order, std::vector<Elem> sorted_elements)
    : elements_(std::move(sorted_elements)), mask_(group_order, 0)
{
    for (Elem x : elements_)
        mask_[x] = 1;
}

bool Subgroup::includes(Subgroup const & o) const
{
    return std::all_of(o.elements_.begin(), o.elements_.end(),
                       [this](Elem x) { return contains(x); });
}

SubgroupBuilder::SubgroupBuilder(GroupTable const & g)
    : g_(g), mask_(g.order(), 0)
{
    push(0);
}

void SubgroupBuilder::push(Elem x)
{
    if (!mask_[x]) {
        mask_[x] = 1;
        elements_.push_back(x);
    }
}

void SubgroupBuilder::add_generator(Elem x)
{
    if (mask_[x])
        return;
    gens_.push_back(x);
    /* old elements are closed under the old generators */
    std::size_t old = elements_.size();
    for (std::size_t i = 0; i < old; ++i)
        push(g_.mul(elements_[i], x));
    for (std::size_t head = old; head < elements_.size(); ++head) {
        Elem y = elements_[head];
        for (Elem s : gens_)
            push(g_.mul(y, s));
    }
}

Subgroup SubgroupBuilder::build() const
{
    std::vector<Elem> sorted = elements_;
    std::sort(sorted.begin(), sorted.end());
    return Subgroup(g_.order(), std::move(sorted));
}

Subgroup whole_group(GroupTable const & g)
{
    std::vector<Elem> all(g.order());
    for (Elem x = 0; x < g.order(); ++x)
        all[x] = x;
    return Subgroup(g.order(), std::move(all));
}

Subgroup trivial_subgroup(GroupTable const & g)
{
    return Subgroup(g.order(), {0});
}

Subgroup generated_subgroup(GroupTable const & g, std::span<Elem const> gens)
{
    SubgroupBuilder b(g);
    for (Elem x : gens)
        b.add_generator(x);
    return b.build();
}

std::vector<Elem> generating_set(GroupTable const & g)
{
    SubgroupBuilder b(g);
    for (Elem x = 1; x < g.order() && b.size() < g.order(); ++x)
        b.add_generator(x);
    return b.generators();
}

bool is_normal(GroupTable const & g, Subgroup const & h)
{
    for (Elem s : generating_set(g))
        for (Elem x : h.elements())
            if (!h.contains(g.conjugate(x, s)))
                return false;
    return true;
}

Subgroup join_normal(GroupTable const & g, std::span<Subgroup const> parts)
{
    SubgroupBuilder b(g);
    for (auto const & part : parts) {
        if (!is_normal(g, part))
            fail(ErrorKind::InternalError, "join_normal: input subgroup is not normal");
        for (Elem x : part.elements())
            b.add_generator(x);
    }
    return b.build();
}

unsigned exponent(GroupTable const & g)
{
    unsigned e = 1;
    for (Elem x = 0; x < g.order(); ++x)
        e = std::max(e, g.element_order(x));
    return e;
}

unsigned log_p_index(std::uint32_t p, std::size_t big, std::size_t small)
{
    if (small == 0 || big % small != 0)
        fail(ErrorKind::InternalError, "subgroup order does not divide the group order");
    std::size_t q = big / small;
    unsigned k = 0;
    while (q > 1) {
        if (q % p != 0)
            fail(ErrorKind::InternalError, "index is not a power of p");
        q /= p;
        ++k;
    }
    return k;
}

fp::Subspace augmentation_ideal(GroupTable const & g)
{
    std::uint32_t p = g.prime();
    fp::Subspace s(p, g.order());
    for (Elem x = 1; x < g.order(); ++x) {
        fp::Vec v(g.order(), 0);
        v[x] = 1;
        v[0] = p - 1;
        s.insert(std::move(v));
    }
    return s;
}

std::vector<fp::Subspace> ideal_powers(GroupTable const & g)
{
    std::uint32_t p = g.prime();
    std::size_t n = g.order();
    auto gens = generating_set(g);
    std::vector<fp::Subspace> powers{augmentation_ideal(g)};
    while (powers.back().dim() > 0) {
        fp::Subspace next(p, n);
        for (auto const & u : powers.back().basis()) {
            for (Elem s : gens) {
                /* u (s - 1) */
                fp::Vec w(n, 0);
                for (Elem h = 0; h < n; ++h) {
                    if (u[h] == 0)
                        continue;
                    Elem hs = g.mul(h, s);
                    w[hs] = fp::add(w[hs], u[h], p);
                    w[h] = fp::sub(w[h], u[h], p);
                }
                next.insert(std::move(w));
            }
        }
        if (next.dim() >= powers.back().dim())
            fail(ErrorKind::InternalError, "augmentation ideal powers are not descending");
        powers.push_back(std::move(next));
    }
    return powers;
}

fp::Subspace ideal_power(GroupTable const & g, unsigned n)
{
    if (n == 0)
        fail(ErrorKind::InvalidArgument, "ideal_power needs n >= 1");
    auto powers = ideal_powers(g);
    if (n > powers.size())
        return powers.back();
    return powers[n - 1];
}

static Subgroup oracle_from(GroupTable const & g, fp::Subspace const & ideal)
{
    std::vector<Elem> members;
    std::uint32_t p = g.prime();
    for (Elem x = 0; x < g.order(); ++x) {
        fp::Vec v(g.order(), 0);
        if (x != 0) {
            v[x] = 1;
            v[0] = p - 1;
        }
        if (ideal.contains(v))
            members.push_back(x);
    }
    return Subgroup(g.order(), std::move(members));
}

Subgroup dimension_subgroup_oracle(GroupTable const & g, unsigned n)
{
    return oracle_from(g, ideal_power(g, n));
}

std::vector<Subgroup> dimension_series_oracle(GroupTable const & g)
{
    auto powers = ideal_powers(g);
    std::vector<Subgroup> out;
    for (auto const & ideal : powers) {
        out.push_back(oracle_from(g, ideal));
        if (out.back().is_trivial())
            break;
    }
    return out;
}

Subgroup commutator_subgroup(GroupTable const & g, Subgroup const & a, Subgroup const & b)
{
    SubgroupBuilder builder(g);
    for (Elem x : a.elements())
        for (Elem y : b.elements())
            builder.add_generator(g.commutator(x, y));
    return builder.build();
}

std::vector<Subgroup> lower_central_series(GroupTable const & g)
{
    std::vector<Subgroup> series{whole_group(g)};
    Subgroup all = whole_group(g);
    for (;;) {
        Subgroup next = commutator_subgroup(g, series.back(), all);
        if (next == series.back())
            break;
        series.push_back(std::move(next));
    }
    return series;
}

Subgroup power_subgroup(GroupTable const & g, Subgroup const & h, std::uint64_t q)
{
    SubgroupBuilder builder(g);
    for (Elem x : h.elements())
        builder.add_generator(g.pow(x, q));
    return builder.build();
}

namespace {

struct LazardData {
    std::vector<Subgroup> lcs;
    unsigned exponent;

    explicit LazardData(GroupTable const & g)
        : lcs(lower_central_series(g)), exponent(groupcore::exponent(g))
    {
    }

    /* gamma_i for i >= 1; past the end of the series it stays at the last term */
    Subgroup const & gamma(std::size_t i) const
    {
        return lcs[std::min(i, lcs.size()) - 1];
    }
};

Subgroup lazard_term(GroupTable const & g, LazardData const & data, unsigned n,
                     LazardPairs pairs)
{
    std::vector<Subgroup> parts;
    std::uint64_t p = g.prime();
    /* gamma_i^(p^j) is trivial once p^j reaches the exponent, except p^0 */
    for (std::uint64_t q = 1;; q *= p) {
        if (pairs == LazardPairs::minimal) {
            std::size_t i = static_cast<std::size_t>((n + q - 1) / q);
            parts.push_back(power_subgroup(g, data.gamma(std::max<std::size_t>(i, 1)), q));
        } else {
            for (std::size_t i = 1; i <= data.lcs.size() + 1; ++i)
                if (i * q >= n)
                    parts.push_back(power_subgroup(g, data.gamma(i), q));
        }
        if (q >= data.exponent)
            break;
    }
    return join_normal(g, parts);
}

} // namespace

Subgroup dimension_subgroup_lazard(GroupTable const & g, unsigned n, LazardPairs pairs)
{
    if (n == 0)
        fail(ErrorKind::InvalidArgument, "dimension subgroups are indexed from 1");
    LazardData data(g);
    return lazard_term(g, data, n, pairs);
}

std::vector<Subgroup> dimension_series_lazard(GroupTable const & g)
{
    LazardData data(g);
    std::vector<Subgroup> out;
    for (unsigned n = 1;; ++n) {
        out.push_back(lazard_term(g, data, n, LazardPairs::minimal));
        if (out.back().is_trivial())
            break;
        if (n > g.order())
            fail(ErrorKind::InternalError, "dimension series does not terminate");
    }
    return out;
}

std::vector<unsigned> dimension_factors(GroupTable const & g)
{
    auto series = dimension_series_lazard(g);
    std::vector<unsigned> out;
    for (std::size_t k = 0; k + 1 < series.size(); ++k) {
        if (!series[k].includes(series[k + 1]))
            fail(ErrorKind::InternalError, "dimension series is not descending");
        out.push_back(log_p_index(g.prime(), series[k].size(), series[k + 1].size()));
    }
    return out;
}

unsigned dim_g3_mod_g4(GroupTable const & g)
{
    LazardData data(g);
    Subgroup g3 = lazard_term(g, data, 3, LazardPairs::minimal);
    Subgroup g4 = lazard_term(g, data, 4, LazardPairs::minimal);
    return log_p_index(g.prime(), g3.size(), g4.size());
}

} // namespace ptower::groupcore
