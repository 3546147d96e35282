#include "ptower/builtin_groups.hpp"

#include <functional>
#include <map>
#include <string>

#include "ptower/cayley.hpp"
#include "ptower/error.hpp"

namespace ptower::groupcore {

std::vector<Elem> fill_cayley_table(std::size_t n, std::size_t ngens,
                                    std::vector<Elem> const & parent,
                                    std::vector<std::uint32_t> const & via,
                                    std::vector<Elem> const & right_gen, Exec exec)
{
    std::vector<Elem> flat(n * n);
    auto fill_row = [&](std::size_t x) {
        Elem * row = flat.data() + x * n;
        row[0] = Elem(x);
        /* BFS order guarantees parent[j] < j */
        for (std::size_t j = 1; j < n; ++j)
            row[j] = right_gen[row[parent[j]] * ngens + via[j]];
    };
    if (exec == Exec::serial) {
        for (std::size_t x = 0; x < n; ++x)
            fill_row(x);
    } else {
        auto sn = static_cast<long>(n);
#pragma omp parallel for schedule(static)
        for (long x = 0; x < sn; ++x)
            fill_row(static_cast<std::size_t>(x));
    }
    return flat;
}

GroupTable cyclic_group(std::uint32_t n, std::uint32_t p)
{
    std::uint64_t m = n;
    std::vector<std::uint64_t> gens;
    if (n > 1)
        gens.push_back(1);
    return cayley_table(p, std::uint64_t{0}, gens,
                        [m](std::uint64_t a, std::uint64_t b) { return (a + b) % m; });
}

GroupTable direct_product(GroupTable const & a, GroupTable const & b)
{
    if (a.prime() != b.prime())
        fail(ErrorKind::InvalidArgument, "direct product of groups for different primes");
    std::uint64_t nb = b.order();
    std::vector<std::uint64_t> gens;
    for (Elem x : generating_set(a))
        gens.push_back(x * nb);
    for (Elem y : generating_set(b))
        gens.push_back(y);
    return cayley_table(a.prime(), std::uint64_t{0}, gens,
                        [&](std::uint64_t u, std::uint64_t v) {
                            return a.mul(Elem(u / nb), Elem(v / nb)) * nb +
                                   b.mul(Elem(u % nb), Elem(v % nb));
                        });
}

GroupTable dihedral_group(std::uint32_t order)
{
    std::uint64_t m = order / 2;
    /* code 2r + s for rot^r ref^s */
    auto mul = [m](std::uint64_t x, std::uint64_t y) {
        std::uint64_t r1 = x / 2, s1 = x % 2, r2 = y / 2, s2 = y % 2;
        std::uint64_t r = s1 ? (r1 + m - r2) % m : (r1 + r2) % m;
        return 2 * r + (s1 ^ s2);
    };
    return cayley_table(2, std::uint64_t{0}, {2, 1}, mul);
}

GroupTable quaternion_group(std::uint32_t order)
{
    std::uint64_t m = order / 2;
    /* code 2a + b for x^a y^b, with x^m = 1, y^2 = x^(m/2), y x = x^-1 y */
    auto mul = [m](std::uint64_t u, std::uint64_t v) {
        std::uint64_t a1 = u / 2, b1 = u % 2, a2 = v / 2, b2 = v % 2;
        if (b1 == 0)
            return 2 * ((a1 + a2) % m) + b2;
        std::uint64_t a = (a1 + m - a2) % m;
        if (b2 == 1)
            return 2 * ((a + m / 2) % m);
        return 2 * a + 1;
    };
    return cayley_table(2, std::uint64_t{0}, {2, 1}, mul);
}

GroupTable heisenberg_group(std::uint32_t p)
{
    std::uint64_t q = p;
    /* code a p^2 + b p + c for [[1,a,c],[0,1,b],[0,0,1]] */
    auto mul = [q](std::uint64_t u, std::uint64_t v) {
        std::uint64_t a1 = u / (q * q), b1 = (u / q) % q, c1 = u % q;
        std::uint64_t a2 = v / (q * q), b2 = (v / q) % q, c2 = v % q;
        return ((a1 + a2) % q) * q * q + ((b1 + b2) % q) * q + (c1 + c2 + a1 * b2) % q;
    };
    return cayley_table(p, std::uint64_t{0}, {q * q, q}, mul);
}

GroupTable wreath_cp_cp(std::uint32_t p)
{
    std::size_t n = std::size_t{p} * p;
    std::string id(n, '\0'), base(n, '\0'), top(n, '\0');
    for (std::size_t i = 0; i < n; ++i) {
        id[i] = char(i);
        base[i] = char(i < p ? (i + 1) % p : i);
        top[i] = char((i + p) % n);
    }
    auto mul = [n](std::string const & x, std::string const & y) {
        std::string r(n, '\0');
        for (std::size_t i = 0; i < n; ++i)
            r[i] = y[static_cast<unsigned char>(x[i])];
        return r;
    };
    return cayley_table(p, id, {base, top}, mul);
}

namespace {

using Factory = std::function<GroupTable()>;

std::map<std::string, Factory, std::less<>> const & registry()
{
    static const std::map<std::string, Factory, std::less<>> groups = {
        {"trivial", [] { return cyclic_group(1, 2); }},
        {"C2", [] { return cyclic_group(2, 2); }},
        {"C4", [] { return cyclic_group(4, 2); }},
        {"C8", [] { return cyclic_group(8, 2); }},
        {"C16", [] { return cyclic_group(16, 2); }},
        {"C3", [] { return cyclic_group(3, 3); }},
        {"C9", [] { return cyclic_group(9, 3); }},
        {"C27", [] { return cyclic_group(27, 3); }},
        {"C5", [] { return cyclic_group(5, 5); }},
        {"C25", [] { return cyclic_group(25, 5); }},
        {"C7", [] { return cyclic_group(7, 7); }},
        {"C2xC2", [] { return direct_product(cyclic_group(2, 2), cyclic_group(2, 2)); }},
        {"C2xC4", [] { return direct_product(cyclic_group(2, 2), cyclic_group(4, 2)); }},
        {"C2xC8", [] { return direct_product(cyclic_group(2, 2), cyclic_group(8, 2)); }},
        {"C4xC4", [] { return direct_product(cyclic_group(4, 2), cyclic_group(4, 2)); }},
        {"C2xC2xC2", [] { return direct_product(builtin_group("C2xC2"), cyclic_group(2, 2)); }},
        {"C2xC2xC2xC2",
         [] { return direct_product(builtin_group("C2xC2"), builtin_group("C2xC2")); }},
        {"C3xC3", [] { return direct_product(cyclic_group(3, 3), cyclic_group(3, 3)); }},
        {"C3xC9", [] { return direct_product(cyclic_group(3, 3), cyclic_group(9, 3)); }},
        {"C9xC9", [] { return direct_product(cyclic_group(9, 3), cyclic_group(9, 3)); }},
        {"C5xC5", [] { return direct_product(cyclic_group(5, 5), cyclic_group(5, 5)); }},
        {"D4", [] { return dihedral_group(8); }},
        {"D8", [] { return dihedral_group(16); }},
        {"Q8", [] { return quaternion_group(8); }},
        {"Q16", [] { return quaternion_group(16); }},
        {"D4xC2", [] { return direct_product(dihedral_group(8), cyclic_group(2, 2)); }},
        {"Q8xC2", [] { return direct_product(quaternion_group(8), cyclic_group(2, 2)); }},
        {"heisenberg_27", [] { return heisenberg_group(3); }},
        {"heisenberg_125", [] { return heisenberg_group(5); }},
        {"C3xheisenberg_27", [] { return direct_product(cyclic_group(3, 3), heisenberg_group(3)); }},
        {"C3wrC3", [] { return wreath_cp_cp(3); }},
    };
    return groups;
}

} // namespace

std::vector<std::string> builtin_group_names()
{
    std::vector<std::string> names;
    for (auto const & [name, factory] : registry())
        names.push_back(name);
    return names;
}

bool is_builtin_group(std::string_view name)
{
    return registry().find(name) != registry().end();
}

GroupTable builtin_group(std::string_view name)
{
    auto it = registry().find(name);
    if (it == registry().end())
        fail(ErrorKind::SchemaError, "unknown builtin group '" + std::string(name) + "'");
    return it->second();
}

} // namespace ptower::groupcore
