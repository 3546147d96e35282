#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ptower/bigint.hpp"
#include "ptower/builtin_groups.hpp"
#include "ptower/error.hpp"
#include "ptower/groupcore.hpp"
#include "ptower/gsineq.hpp"
#include "ptower/json_io.hpp"
#include "ptower/magnus.hpp"
#include "ptower/quadforms.hpp"
#include "ptower/towerdecide.hpp"
#include "ptower/word_syntax.hpp"

using namespace ptower;
using cli::Json;

namespace {

/* Raised for malformed flag values; reported like any other usage error. */
struct UsageError {
    std::string flag;
    std::string message;
};

struct Options {
    std::string discriminant;
    std::string radicand;
    std::uint32_t p = 0;
    std::string relations;
    std::string word;
    std::string group;
    std::string poly;
    std::string levels;
    std::string at;
    std::optional<std::int64_t> dim_g3_g4;
    unsigned d = 2;
    unsigned max_level = 15;
    unsigned truncation = 8;
    bool assume_33 = false;
    bool pretty = false;
    bool forms = false;
    bool serial = false;
};

Exec exec_of(Options const & o) { return o.serial ? Exec::serial : Exec::parallel; }

BigInt integer_flag(std::string const & flag, std::string const & text)
{
    try {
        return parse_bigint(text);
    } catch (Error const & e) {
        throw UsageError{flag, e.what()};
    }
}

/* -D directly, or -m converted to a fundamental discriminant */
BigInt discriminant_of(Options const & o)
{
    if (!o.discriminant.empty())
        return integer_flag("-D", o.discriminant);
    if (!o.radicand.empty())
        return quadforms::fundamental_discriminant(integer_flag("-m", o.radicand)).D;
    throw UsageError{"-D", "one of -D or -m is required"};
}

std::uint32_t prime_of(Options const & o)
{
    if (o.p == 0)
        throw UsageError{"-p", "a prime is required"};
    return o.p;
}

/* A path to an existing file is read; anything else is taken as inline text. */
std::string text_or_file(std::string const & value)
{
    std::error_code ec;
    if (std::filesystem::is_regular_file(value, ec))
        return cli::read_file(value);
    return value;
}

std::vector<magnus::Word> relations_of(Options const & o)
{
    if (o.relations.empty())
        throw UsageError{"--relations", "relation words are required"};
    return cli::parse_relations(text_or_file(o.relations));
}

std::pair<magnus::Word, magnus::Word> relation_pair(Options const & o)
{
    auto rels = relations_of(o);
    if (rels.size() != 2)
        fail(ErrorKind::ConsistencyError,
             std::to_string(rels.size()) + " relations supplied; a 2-generated tower group has exactly 2");
    return {rels[0], rels[1]};
}

std::string pretty_value(Json const & v)
{
    if (v.is_string())
        return v.get<std::string>();
    return v.dump();
}

void emit(Json const & j, bool pretty)
{
    if (!pretty) {
        std::cout << j.dump() << '\n';
        return;
    }
    for (auto const & [key, value] : j.items()) {
        if (value.is_array() && !value.empty() && value.front().is_string()) {
            std::cout << key << ":\n";
            for (auto const & line : value)
                std::cout << "  - " << line.get<std::string>() << '\n';
        } else if (value.is_object()) {
            std::cout << key << ":\n";
            for (auto const & [k, v] : value.items())
                std::cout << "  " << k << ": " << pretty_value(v) << '\n';
        } else {
            std::cout << key << ": " << pretty_value(value) << '\n';
        }
    }
}

Json int_or_string(BigInt const & x)
{
    if (x.fits_slong_p())
        return Json(x.get_si());
    return Json(x.get_str());
}

// --- commands --------------------------------------------------------------

Json run_classgroup(Options const & o)
{
    BigInt D = discriminant_of(o);
    if (!quadforms::is_fundamental_discriminant(D))
        fail(ErrorKind::BadDiscriminant, D.get_str() + " is not a negative fundamental discriminant");
    auto forms = quadforms::enumerate_reduced_forms(D, exec_of(o));
    auto s = quadforms::structure_of(forms, exec_of(o));
    Json j;
    j["discriminant"] = int_or_string(D);
    j["class_number"] = s.order;
    j["structure"] = s.elementary_divisors;
    if (o.forms) {
        Json list = Json::array();
        for (auto const & f : forms)
            list.push_back(cli::to_json(f));
        j["forms"] = list;
    }
    return j;
}

Json run_prank(Options const & o)
{
    BigInt D = discriminant_of(o);
    std::uint32_t p = prime_of(o);
    if (!quadforms::is_fundamental_discriminant(D))
        fail(ErrorKind::BadDiscriminant, D.get_str() + " is not a negative fundamental discriminant");
    Json j;
    j["p_rank"] = quadforms::p_rank(D, p, exec_of(o));
    return j;
}

Json run_decide(Options const & o)
{
    towerdecide::TowerInput input;
    input.D = discriminant_of(o);
    input.p = prime_of(o);
    if (!o.relations.empty())
        input.relations = relation_pair(o);
    input.dim_g3_g4 = o.dim_g3_g4;
    input.assume_33 = o.assume_33;
    return cli::to_json(towerdecide::decide(input, exec_of(o)));
}

/* "3:1,9:1" */
std::map<unsigned, BigInt> parse_levels(std::string const & text)
{
    std::map<unsigned, BigInt> levels;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        std::size_t colon = item.find(':');
        if (colon == std::string::npos)
            throw UsageError{"--levels", "expected k:r_k pairs separated by commas, got \"" + item + "\""};
        BigInt k = integer_flag("--levels", item.substr(0, colon));
        BigInt r = integer_flag("--levels", item.substr(colon + 1));
        if (k < 0 || k > 4096)
            throw UsageError{"--levels", "level " + k.get_str() + " out of range"};
        levels[static_cast<unsigned>(k.get_ui())] += r;
        if (comma == std::string::npos)
            break;
        pos = comma + 1;
    }
    return levels;
}

Json run_gs_check(Options const & o)
{
    gsineq::ZassenhausPolynomial z;
    if (!o.poly.empty())
        z = cli::polynomial_from_json(cli::parse_json(text_or_file(o.poly), "--poly"));
    else if (!o.levels.empty())
        z = gsineq::ZassenhausPolynomial(o.d, parse_levels(o.levels));
    else
        throw UsageError{"--levels", "one of --levels or --poly is required"};

    Json j;
    j["polynomial"] = cli::to_json(z);
    if (!o.at.empty()) {
        Rational t;
        try {
            t = parse_rational(o.at);
        } catch (Error const & e) {
            throw UsageError{"--at", e.what()};
        }
        j["at"] = to_string(t);
        j["value"] = to_string(gsineq::evaluate(z, t));
    }
    Json report = cli::to_json(gsineq::gs_contradiction(z));
    for (auto const & [key, value] : report.items())
        j[key] = value;
    return j;
}

Json run_gs_admissible(Options const & o)
{
    auto result = gsineq::admissible_types(o.d, o.max_level);
    Json types = Json::array();
    for (auto const & t : result.types)
        types.push_back({t.i, t.j});
    Json j;
    j["types"] = types;
    if (!result.complete)
        j["complete"] = false;
    return j;
}

std::vector<std::size_t> orders(std::vector<groupcore::Subgroup> const & series)
{
    std::vector<std::size_t> out;
    for (auto const & s : series)
        out.push_back(s.size());
    return out;
}

constexpr std::size_t kOracleLimit = 729;

Json run_filtration(Options const & o)
{
    if (o.group.empty())
        throw UsageError{"--group", "a builtin group name or group file is required"};
    auto g = cli::load_group(o.group);
    auto lazard = groupcore::dimension_series_lazard(g);
    /* the group-ring computation is cubic in |G|; cross-check only small groups */
    bool checked = g.order() <= kOracleLimit;
    if (checked && groupcore::dimension_series_oracle(g) != lazard)
        fail(ErrorKind::InternalError, "group-ring and product-formula dimension series differ");

    Json j;
    j["p"] = g.prime();
    j["order"] = g.order();
    j["dimension_series_orders"] = orders(lazard);
    j["dimension_factors"] = groupcore::dimension_factors(g);
    j["lower_central_orders"] = orders(groupcore::lower_central_series(g));
    j["dim_g3_g4"] = groupcore::dim_g3_mod_g4(g);
    j["oracle_checked"] = checked;
    return j;
}

Json level_json(std::optional<unsigned> lvl, unsigned truncation)
{
    if (lvl)
        return Json(*lvl);
    return Json(">=" + std::to_string(truncation + 1));
}

Json run_magnus_level(Options const & o)
{
    std::uint32_t p = prime_of(o);
    if (!fp::is_prime(p))
        fail(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
    if (o.truncation < 1 || o.truncation > 16)
        throw UsageError{"--truncation", "truncation must be between 1 and 16"};
    Json j;
    if (!o.word.empty()) {
        auto w = cli::parse_word(o.word);
        j["word"] = cli::unparse(w);
        j["level"] = level_json(magnus::level(w, p, o.truncation), o.truncation);
        return j;
    }
    auto rels = relations_of(o);
    Json words = Json::array();
    for (auto const & w : rels)
        words.push_back(level_json(magnus::level(w, p, o.truncation), o.truncation));
    auto profile = magnus::level_profile(rels, p, o.truncation);
    j["levels"] = words;
    j["profile"] = cli::to_json(profile);
    j["koch_venkov_violations"] = magnus::koch_venkov_violations(profile);
    return j;
}

Json run_massey_matrix(Options const & o)
{
    std::uint32_t p = prime_of(o);
    auto [rho1, rho2] = relation_pair(o);
    auto m = magnus::massey_trace_matrix(rho1, rho2, p);
    Json j;
    j["matrix"] = {{m.matrix[0][0], m.matrix[0][1]}, {m.matrix[1][0], m.matrix[1][1]}};
    if (p == 3)
        j["cube_exponents"] = {{m.cube_exponents[0][0], m.cube_exponents[0][1]},
                               {m.cube_exponents[1][0], m.cube_exponents[1][1]}};
    j["determinant"] = m.determinant();
    j["invertible"] = m.invertible();
    return j;
}

void add_field_flags(CLI::App * cmd, Options & o)
{
    auto * D = cmd->add_option("-D", o.discriminant, "fundamental discriminant (negative)");
    auto * m = cmd->add_option("-m", o.radicand, "squarefree radicand of Q(sqrt(m))");
    D->excludes(m);
}

} // namespace

int main(int argc, char ** argv)
{
    CLI::App app{"p-class field tower toolkit for imaginary quadratic fields"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_flag("--pretty", o.pretty, "human-readable output instead of JSON");
    app.add_flag("--serial", o.serial, "use the serial kernels");

    auto * classgroup = app.add_subcommand("classgroup", "class group structure from reduced forms");
    add_field_flags(classgroup, o);
    classgroup->add_flag("--forms", o.forms, "list the reduced forms");

    auto * prank = app.add_subcommand("prank", "p-rank of the class group");
    add_field_flags(prank, o);
    prank->add_option("-p", o.p, "prime")->required();

    auto * decide = app.add_subcommand("decide", "decide the p-class field tower length");
    add_field_flags(decide, o);
    decide->add_option("-p", o.p, "odd prime")->required();
    decide->add_option("--relations", o.relations, "two relation words, inline or a file");
    decide->add_option("--dim-g3g4", o.dim_g3_g4, "dim G_3/G_4 of the tower group");
    decide->add_flag("--assume-33", o.assume_33, "assume the (3,3) conjecture");

    auto * gs_check = app.add_subcommand("gs-check", "Golod-Shafarevich check of a Zassenhaus polynomial");
    gs_check->add_option("-d", o.d, "generator rank");
    gs_check->add_option("--levels", o.levels, "relation counts as k:r_k,...");
    gs_check->add_option("--poly", o.poly, "polynomial JSON, inline or a file");
    gs_check->add_option("--at", o.at, "also evaluate at this rational t");

    auto * gs_admissible = app.add_subcommand("gs-admissible", "admissible Zassenhaus types");
    gs_admissible->add_option("-d", o.d, "generator rank (2)");
    gs_admissible->add_option("--max-level", o.max_level, "largest level to enumerate");

    auto * filtration = app.add_subcommand("filtration", "dimension subgroup series of a finite p-group");
    filtration->add_option("--group", o.group, "builtin group name or group JSON file");

    auto * magnus_level = app.add_subcommand("magnus-level", "Zassenhaus levels of relation words");
    magnus_level->add_option("-p", o.p, "prime")->required();
    auto * word = magnus_level->add_option("--word", o.word, "a single word");
    auto * rels = magnus_level->add_option("--relations", o.relations, "relation words, inline or a file");
    word->excludes(rels);
    magnus_level->add_option("--truncation", o.truncation, "Magnus truncation degree");

    auto * massey = app.add_subcommand("massey-matrix", "degree-3 coefficient matrix of two relations");
    massey->add_option("-p", o.p, "prime")->required();
    massey->add_option("--relations", o.relations, "two relation words, inline or a file")->required();

    try {
        app.parse(argc, argv);
    } catch (CLI::CallForHelp const & e) {
        return app.exit(e);
    } catch (CLI::CallForAllHelp const & e) {
        return app.exit(e);
    } catch (CLI::ParseError const & e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    }

    try {
        Json out;
        if (*classgroup)
            out = run_classgroup(o);
        else if (*prank)
            out = run_prank(o);
        else if (*decide)
            out = run_decide(o);
        else if (*gs_check)
            out = run_gs_check(o);
        else if (*gs_admissible)
            out = run_gs_admissible(o);
        else if (*filtration)
            out = run_filtration(o);
        else if (*magnus_level)
            out = run_magnus_level(o);
        else
            out = run_massey_matrix(o);
        emit(out, o.pretty);
    } catch (UsageError const & e) {
        std::cerr << "usage error: " << e.flag << ": " << e.message << '\n';
        return 2;
    } catch (Error const & e) {
        Json err;
        err["error"] = e.name();
        err["message"] = e.what();
        std::cerr << err.dump() << '\n';
        return 1;
    }
    return 0;
}
