#ifndef PTOWER_JSON_IO_HPP
#define PTOWER_JSON_IO_HPP

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ptower/groupcore.hpp"
#include "ptower/gsineq.hpp"
#include "ptower/magnus.hpp"
#include "ptower/quadforms.hpp"
#include "ptower/towerdecide.hpp"

/* JSON is the machine format of the command line tool. */
namespace ptower::cli {

using Json = nlohmann::ordered_json;

Json to_json(towerdecide::TowerVerdict const & v);
Json to_json(quadforms::AbelianStructure const & s);
Json to_json(quadforms::QuadForm const & f);
Json to_json(gsineq::RootReport const & r);
Json to_json(gsineq::ZassenhausPolynomial const & z);
Json to_json(magnus::LevelProfile const & profile);
Json to_json(magnus::Deg3Coefficients const & c, std::uint32_t p);
Json to_json(groupcore::GroupTable const & g);

/* {"d": int, "levels": {"k": r_k}}; SchemaError on anything else */
gsineq::ZassenhausPolynomial polynomial_from_json(Json const & j);

/* {"p": int, "order": int, "table": [[int]]}; SchemaError / GroupAxiomError */
groupcore::GroupTable group_from_json(Json const & j);

/* A builtin group name, or a path to a group file. */
groupcore::GroupTable load_group(std::string_view name_or_path);

/* Parses JSON text, mapping parser errors to SchemaError. */
Json parse_json(std::string_view text, std::string_view origin);

std::string read_file(std::string const & path);

} // namespace ptower::cli

#endif /* PTOWER_JSON_IO_HPP */
