#include "doctest.h"
#include "scsp/text_io.hpp"
#include "support/structures.hpp"

using namespace scsp;
using namespace scsp::testing;

TEST_CASE("structure files round-trip") {
    const char* text =
        "# two-element OR structure\n"
        "domain 2\n"
        "relation R 2\n"
        "0 1\n"
        "1 0\n"
        "1 1\n"
        "end\n";
    Structure s = parse_structure(text);
    CHECK(s == make_or());
    CHECK(parse_structure(serialize_structure(s)) == s);
}

TEST_CASE("structure parser reports line numbers") {
    CHECK_THROWS_WITH_AS(parse_structure("domain 2\nrelation R 2\n0 1\n"),
                         doctest::Contains("not terminated"), ParseError);
    CHECK_THROWS_WITH_AS(parse_structure("domain 2\nfoo R 2\n"), doctest::Contains("line 2"),
                         ParseError);
    CHECK_THROWS_WITH_AS(parse_structure("domain 2\nrelation R 2\n0 7\nend\n"),
                         doctest::Contains("line 3"), ParseError);
    CHECK_THROWS_WITH_AS(parse_structure("relation R 2\nend\n"), doctest::Contains("domain"),
                         ParseError);
}

TEST_CASE("formula files accept vars, atom, eq and const") {
    const char* text =
        "vars u1 u2\n"
        "vars u3\n"
        "atom R u1 u2 u3\n"
        "eq u1 u2\n"
        "const 1 u3\n";
    QfppFormula phi = parse_formula(text);
    CHECK(phi.vars.size() == 3);
    REQUIRE(phi.atoms.size() == 2);
    CHECK(phi.atoms[0].symbol == "R");
    CHECK(phi.atoms[1].symbol == "C_1");
    CHECK(phi.atoms[1].args == std::vector<Variable>{Variable{"u3"}});
    REQUIRE(phi.equalities.size() == 1);

    QfppFormula again = parse_formula(serialize_formula(phi));
    CHECK(again == phi);
}

TEST_CASE("formula parser rejects unknown directives and undeclared variables") {
    CHECK_THROWS_WITH_AS(parse_formula("vars u\nquux u\n"), doctest::Contains("line 2"), ParseError);
    CHECK_THROWS_WITH_AS(parse_formula("vars u\natom R u w\n"), doctest::Contains("'w'"), ParseError);
    CHECK_THROWS_WITH_AS(parse_formula("vars u\nconst -1 u\n"), doctest::Contains("non-negative"),
                         ParseError);
}

TEST_CASE("instance parsers reject eq lines") {
    CHECK_THROWS_AS(parse_csp_instance("vars u w\neq u w\n"), ParseError);
    CHECK_THROWS_AS(parse_scsp_instance("vars u w\neq u w\n"), ParseError);
    CspInstance inst = parse_csp_instance("vars u w\natom R u w\n");
    CHECK(inst.vars.size() == 2);
    CHECK(inst.atoms.size() == 1);
}

TEST_CASE("operation tables round-trip") {
    const char* text =
        "op 2\n"
        "0 1\n"
        "1 1\n"
        "end\n"
        "op 1\n"
        "1 0\n"
        "end\n";
    auto tables = parse_operation_tables(text, 2);
    REQUIRE(tables.size() == 2);
    CHECK(tables[0].arity == 2);
    CHECK(tables[0].values == std::vector<int>{0, 1, 1, 1});
    CHECK(tables[1].values == std::vector<int>{1, 0});
    CHECK(parse_operation_tables(serialize_operation_table(tables[0]), 2)[0] == tables[0]);
}

TEST_CASE("operation table parser validates the value count") {
    CHECK_THROWS_WITH_AS(parse_operation_tables("op 2\n0 1 1\nend\n", 2), doctest::Contains("expected 4"),
                         ParseError);
    CHECK_THROWS_WITH_AS(parse_operation_tables("op 1\n0 2\nend\n", 2), doctest::Contains("outside"),
                         ParseError);
}

TEST_CASE("fingerprints distinguish structures") {
    CHECK(fingerprint(make_or()) != fingerprint(make_1in3()));
    CHECK(fingerprint(make_or()) == fingerprint(make_or()));
    CHECK(hex64(fingerprint(make_or())).size() == 16);
}
