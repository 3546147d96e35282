#ifndef PTOWER_BUILTIN_GROUPS_HPP
#define PTOWER_BUILTIN_GROUPS_HPP

#include <string>
#include <string_view>
#include <vector>

#include "ptower/groupcore.hpp"

namespace ptower::groupcore {

GroupTable cyclic_group(std::uint32_t n, std::uint32_t p);
GroupTable direct_product(GroupTable const & a, GroupTable const & b);
/* dihedral group of the given order (2m, m a power of 2) */
GroupTable dihedral_group(std::uint32_t order);
/* generalized quaternion group of the given order (>= 8, a power of 2) */
GroupTable quaternion_group(std::uint32_t order);
/* upper unitriangular 3x3 matrices over F_p */
GroupTable heisenberg_group(std::uint32_t p);
/* C_p wr C_p acting on p^2 points, order p^(p+1) */
GroupTable wreath_cp_cp(std::uint32_t p);

std::vector<std::string> builtin_group_names();
bool is_builtin_group(std::string_view name);
/* SchemaError for an unknown name */
GroupTable builtin_group(std::string_view name);

} // namespace ptower::groupcore

#endif /* PTOWER_BUILTIN_GROUPS_HPP */
