#include "ptower/json_io.hpp"

#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

#include "ptower/builtin_groups.hpp"
#include "ptower/error.hpp"

namespace ptower::cli {

namespace {

[[noreturn]] void schema(std::string const & msg) { fail(ErrorKind::SchemaError, msg); }

std::int64_t integer_field(Json const & j, char const * key)
{
    if (!j.contains(key))
        schema(std::string("missing field \"") + key + "\"");
    auto const & v = j.at(key);
    if (!v.is_number_integer())
        schema(std::string("field \"") + key + "\" must be an integer");
    return v.get<std::int64_t>();
}

} // namespace

Json to_json(towerdecide::TowerVerdict const & v)
{
    Json j;
    j["status"] = towerdecide::status_name(v.status);
    if (v.length)
        j["length"] = *v.length;
    j["justification"] = v.justification;
    j["assumptions"] = v.assumptions;
    j["notes"] = v.notes;
    return j;
}

Json to_json(quadforms::AbelianStructure const & s)
{
    Json j;
    j["class_number"] = s.order;
    j["structure"] = s.elementary_divisors;
    return j;
}

Json to_json(quadforms::QuadForm const & f)
{
    /* machine integers when they fit, decimal strings otherwise */
    auto num = [](BigInt const & x) -> Json {
        if (x.fits_slong_p())
            return Json(x.get_si());
        return Json(x.get_str());
    };
    return Json::array({num(f.a), num(f.b), num(f.c)});
}

Json to_json(gsineq::RootReport const & r)
{
    Json j;
    j["contradiction"] = r.has_nonpositive_point;
    j["roots_in_unit_interval"] = r.roots_in_unit_interval;
    if (r.witness) {
        j["witness"] = to_string(*r.witness);
        j["witness_value"] = to_string(*r.value);
    }
    return j;
}

Json to_json(gsineq::ZassenhausPolynomial const & z)
{
    Json levels = Json::object();
    for (auto const & [k, r] : z.levels)
        levels[std::to_string(k)] = r.fits_slong_p() ? Json(r.get_si()) : Json(r.get_str());
    Json j;
    j["d"] = z.d;
    j["levels"] = levels;
    return j;
}

Json to_json(magnus::LevelProfile const & profile)
{
    Json levels = Json::object();
    for (auto const & [k, r] : profile.counts)
        levels[std::to_string(k)] = r;
    if (profile.beyond > 0)
        levels[">=" + std::to_string(profile.truncation + 1)] = profile.beyond;
    Json j;
    j["levels"] = levels;
    j["approximate"] = profile.approximate;
    return j;
}

Json to_json(magnus::Deg3Coefficients const & c, std::uint32_t p)
{
    Json j;
    j["a"] = c.a;
    j["b"] = c.b;
    if (p == 3) {
        j["e1"] = c.e1;
        j["e2"] = c.e2;
    }
    return j;
}

Json to_json(groupcore::GroupTable const & g)
{
    Json table = Json::array();
    for (groupcore::Elem a = 0; a < g.order(); ++a) {
        auto row = g.row(a);
        table.push_back(std::vector<groupcore::Elem>(row.begin(), row.end()));
    }
    Json j;
    j["p"] = g.prime();
    j["order"] = g.order();
    j["table"] = table;
    return j;
}

gsineq::ZassenhausPolynomial polynomial_from_json(Json const & j)
{
    if (!j.is_object())
        schema("polynomial must be a JSON object");
    std::int64_t d = integer_field(j, "d");
    if (d < 1 || d > std::numeric_limits<unsigned>::max())
        schema("\"d\" must be a positive integer");
    if (!j.contains("levels") || !j.at("levels").is_object())
        schema("missing object field \"levels\"");
    std::map<unsigned, BigInt> levels;
    for (auto const & [key, value] : j.at("levels").items()) {
        unsigned long k = 0;
        std::size_t used = 0;
        try {
            k = std::stoul(key, &used);
        } catch (std::exception const &) {
            used = 0;
        }
        if (used == 0 || used != key.size() || k > 4096)
            schema("level key \"" + key + "\" is not a small non-negative integer");
        BigInt r;
        if (value.is_number_integer())
            r = BigInt(std::to_string(value.get<std::int64_t>()));
        else if (value.is_string())
            r = parse_bigint(value.get<std::string>());
        else
            schema("count at level " + key + " must be an integer");
        levels[static_cast<unsigned>(k)] += r;
    }
    return gsineq::ZassenhausPolynomial(static_cast<unsigned>(d), std::move(levels));
}

groupcore::GroupTable group_from_json(Json const & j)
{
    if (!j.is_object())
        schema("group must be a JSON object");
    std::int64_t p = integer_field(j, "p");
    std::int64_t order = integer_field(j, "order");
    if (p < 2 || p > std::numeric_limits<std::uint32_t>::max())
        schema("\"p\" out of range");
    if (order < 1 || order > (1 << 16))
        schema("\"order\" must be between 1 and 65536");
    if (!j.contains("table") || !j.at("table").is_array())
        schema("missing array field \"table\"");
    auto const & rows = j.at("table");
    auto n = static_cast<std::size_t>(order);
    if (rows.size() != n)
        schema("table has " + std::to_string(rows.size()) + " rows, expected " + std::to_string(n));
    std::vector<groupcore::Elem> flat;
    flat.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        auto const & row = rows[i];
        if (!row.is_array() || row.size() != n)
            schema("table row " + std::to_string(i) + " must have " + std::to_string(n) + " entries");
        for (auto const & x : row) {
            if (!x.is_number_integer())
                schema("table row " + std::to_string(i) + " has a non-integer entry");
            auto v = x.get<std::int64_t>();
            if (v < 0 || static_cast<std::size_t>(v) >= n)
                fail(ErrorKind::GroupAxiomError,
                     "closure: entry " + std::to_string(v) + " in row " + std::to_string(i) + " is not an element");
            flat.push_back(static_cast<groupcore::Elem>(v));
        }
    }
    return groupcore::GroupTable(static_cast<std::uint32_t>(p), n, std::move(flat));
}

Json parse_json(std::string_view text, std::string_view origin)
{
    try {
        return Json::parse(text);
    } catch (Json::parse_error const & e) {
        schema(std::string(origin) + ": " + e.what());
    }
}

std::string read_file(std::string const & path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        fail(ErrorKind::InvalidArgument, "cannot read " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

groupcore::GroupTable load_group(std::string_view name_or_path)
{
    if (groupcore::is_builtin_group(name_or_path))
        return groupcore::builtin_group(name_or_path);
    std::string path(name_or_path);
    if (!std::filesystem::is_regular_file(path))
        schema("\"" + path + "\" is neither a builtin group nor a readable file");
    return group_from_json(parse_json(read_file(path), path));
}

} // namespace ptower::cli
