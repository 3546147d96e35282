#ifndef PTOWER_CAYLEY_HPP
#define PTOWER_CAYLEY_HPP

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "ptower/error.hpp"
#include "ptower/exec.hpp"
#include "ptower/groupcore.hpp"

namespace ptower::groupcore {

/*
 * Breadth-first enumeration of the group generated by `gens` inside some
 * ambient monoid, recording for each new element its BFS parent and the
 * generator that reached it.  Index 0 is the identity.
 */
template <class T, class Hash = std::hash<T>>
struct CayleyGraph {
    std::vector<T> elements;
    std::vector<Elem> parent;
    std::vector<std::uint32_t> via;
    std::vector<Elem> right_gen; /* right_gen[x * k + s] = index(x * gens[s]) */
    std::unordered_map<T, Elem, Hash> index;

    template <class Mul>
    CayleyGraph(T const & identity, std::vector<T> const & gens, Mul mul, std::size_t limit)
    {
        std::size_t k = gens.size();
        elements.push_back(identity);
        parent.push_back(0);
        via.push_back(0);
        index.emplace(identity, 0);
        for (std::size_t head = 0; head < elements.size(); ++head) {
            for (std::size_t s = 0; s < k; ++s) {
                T y = mul(elements[head], gens[s]);
                auto [it, fresh] = index.emplace(std::move(y), Elem(elements.size()));
                if (fresh) {
                    if (elements.size() >= limit)
                        fail(ErrorKind::InvalidArgument, "generated group exceeds the size limit");
                    elements.push_back(it->first);
                    parent.push_back(Elem(head));
                    via.push_back(std::uint32_t(s));
                }
                right_gen.push_back(it->second);
            }
        }
    }
};

/*
 * Fills the multiplication table from right multiplications by generators:
 * x * e_j = (x * e_parent(j)) * gen(j).  Rows are independent, which is
 * what the parallel path splits on.
 */
std::vector<Elem> fill_cayley_table(std::size_t n, std::size_t ngens,
                                    std::vector<Elem> const & parent,
                                    std::vector<std::uint32_t> const & via,
                                    std::vector<Elem> const & right_gen, Exec exec);

template <class T, class Mul, class Hash = std::hash<T>>
GroupTable cayley_table(std::uint32_t p, T const & identity, std::vector<T> const & gens,
                        Mul mul, Validation validation = Validation::standard,
                        Exec exec = Exec::parallel, std::size_t limit = 1u << 16)
{
    CayleyGraph<T, Hash> graph(identity, gens, mul, limit);
    std::size_t n = graph.elements.size();
    auto flat = fill_cayley_table(n, gens.size(), graph.parent, graph.via, graph.right_gen, exec);
    return GroupTable(p, n, std::move(flat), validation, exec);
}

} // namespace ptower::groupcore

#endif /* PTOWER_CAYLEY_HPP */
