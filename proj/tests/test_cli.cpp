#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

#include "oracles.hpp"
#include "test_util.hpp"

#include "ptower/json_io.hpp"
#include "ptower/word_syntax.hpp"

using namespace ptower;
using namespace ptower::cli;
using magnus::Letter;
using magnus::Word;

namespace {

Word const x = Word::generator(2, 1);
Word const y = Word::generator(2, 2);

std::string syntax_message(std::string_view text)
{
    try {
        parse_word(text);
    } catch (Error const & e) {
        if (e.kind() == ErrorKind::SyntaxError)
            return e.what();
    }
    return "";
}

struct TempFile {
    std::filesystem::path path;
    explicit TempFile(std::string const & content)
    {
        path = std::filesystem::temp_directory_path() /
               ("ptower_test_" + std::to_string(std::random_device{}()) + ".json");
        std::ofstream(path) << content;
    }
    ~TempFile() { std::filesystem::remove(path); }
};

} // namespace

TEST_SUITE("cli")
{
    TEST_CASE("word grammar")
    {
        CHECK(parse_word("[x,y,x]") == magnus::left_normed(std::vector<Word>{x, y, x}));
        CHECK(parse_word("x^3 y^-3").letters() == std::vector<Letter>{{1, 3}, {2, -3}});
        CHECK(parse_word("x x^-1").is_identity());
        CHECK(parse_word("1").is_identity());
        CHECK(parse_word("  [ x , y ]^2 ") == magnus::commutator(x, y).pow(2));
        CHECK(parse_word("(x y)^-1") == y.inverse() * x.inverse());
        CHECK(parse_word("x1 x2") == x * y);
        CHECK(parse_word("x3").rank() == 3);
        CHECK(parse_word("[x,y,x]^2 [x,y,y]^-1") ==
              magnus::left_normed(std::vector<Word>{x, y, x}).pow(2) *
                  magnus::left_normed(std::vector<Word>{x, y, y}).inverse());
    }

    TEST_CASE("syntax errors carry positions")
    {
        CHECK(syntax_message("[x,y").find("line 1, column 5") != std::string::npos);
        CHECK(syntax_message("x^").find("line 1, column 3") != std::string::npos);
        CHECK(syntax_message("z").find("line 1, column 1") != std::string::npos);
        CHECK(syntax_message("x ]").find("column 3") != std::string::npos);
        CHECK(syntax_message("[x]") != "");
        CHECK(parse_word("").is_identity());
        CHECK_ERROR_KIND(parse_relations("[x,y,x]\n[x,\n"), ErrorKind::SyntaxError);
        try {
            parse_relations("[x,y,x]\n  y^");
            FAIL("expected a syntax error");
        } catch (Error const & e) {
            CHECK(std::string(e.what()).find("line 2, column 5") != std::string::npos);
        }
    }

    TEST_CASE("relation lists")
    {
        auto rels = parse_relations("# basis\n[x,y,x]\n[x,y,y] # second\n");
        REQUIRE(rels.size() == 2);
        CHECK(rels[1] == magnus::left_normed(std::vector<Word>{x, y, y}));
        CHECK(parse_relations("x^3; y^3").size() == 2);
        /* a newline inside brackets does not split */
        CHECK(parse_relations("[x,\n y]").size() == 1);
        CHECK(parse_relations("# nothing\n").empty());
    }

    TEST_CASE("unparse round trip")
    {
        CHECK(unparse(parse_word("x^3 y^-3")) == "x^3 y^-3");
        CHECK(unparse(Word(2)) == "1");
        std::mt19937_64 rng(8);
        for (unsigned rank : {2u, 3u}) {
            for (int trial = 0; trial < 300; ++trial) {
                auto w = oracle::random_word(rng, rank, 8, 5);
                auto text = unparse(w);
                CHECK(parse_word(text, rank) == w);
                CHECK(unparse(parse_word(text, rank)) == text);
            }
        }
    }

    TEST_CASE("group loading")
    {
        CHECK(load_group("Q8").order() == 8);
        CHECK(load_group("heisenberg_27").order() == 27);
        TempFile ok(R"({"p": 2, "order": 2, "table": [[0, 1], [1, 0]]})");
        CHECK(load_group(ok.path.string()).order() == 2);
        TempFile bad_row(R"({"p": 2, "order": 2, "table": [[0, 1], [1, 1]]})");
        CHECK_ERROR_KIND(load_group(bad_row.path.string()), ErrorKind::GroupAxiomError);
        TempFile missing(R"({"p": 2, "table": [[0]]})");
        CHECK_ERROR_KIND(load_group(missing.path.string()), ErrorKind::SchemaError);
        TempFile ragged(R"({"p": 2, "order": 2, "table": [[0, 1], [1]]})");
        CHECK_ERROR_KIND(load_group(ragged.path.string()), ErrorKind::SchemaError);
        TempFile junk("{not json");
        CHECK_ERROR_KIND(load_group(junk.path.string()), ErrorKind::SchemaError);
        CHECK_ERROR_KIND(load_group("no_such_group"), ErrorKind::SchemaError);

        /* serialization round trip */
        auto g = load_group("D4");
        auto again = group_from_json(to_json(g));
        CHECK(again.flat() == g.flat());
    }

    TEST_CASE("polynomials and verdicts as JSON")
    {
        auto z = polynomial_from_json(Json::parse(R"({"d": 2, "levels": {"3": 1, "7": 1}})"));
        CHECK(z.d == 2);
        CHECK(z.levels.size() == 2);
        CHECK(to_json(z).dump() == R"({"d":2,"levels":{"3":1,"7":1}})");
        CHECK_ERROR_KIND(polynomial_from_json(Json::parse(R"({"d": 2, "levels": {"a": 1}})")), ErrorKind::SchemaError);
        CHECK_ERROR_KIND(polynomial_from_json(Json::parse(R"({"levels": {}})")), ErrorKind::SchemaError);
        CHECK_ERROR_KIND(polynomial_from_json(Json::parse(R"({"d": 2, "levels": {"1": 1}})")),
                         ErrorKind::InvalidArgument);

        towerdecide::TowerVerdict v;
        v.status = towerdecide::Status::finite_length;
        v.length = 0;
        v.justification = {"rule"};
        CHECK(to_json(v).dump() ==
              R"({"status":"FiniteLength","length":0,"justification":["rule"],"assumptions":[],"notes":[]})");
    }
}
