#include <algorithm>

#include "doctest.h"
#include "scsp/formula.hpp"
#include "scsp/random_gen.hpp"
#include "support/brute.hpp"
#include "support/structures.hpp"

using namespace scsp;
using namespace scsp::testing;

namespace {

Variable operator""_v(const char* name, std::size_t) { return Variable{name}; }

}  // namespace

TEST_CASE("evaluate checks atoms against relation tables") {
    Structure s = make_or();
    QfppFormula phi;
    phi.vars = {"u"_v, "w"_v};
    phi.atoms = {{"R", {"u"_v, "w"_v}}};
    CHECK(evaluate(s, phi, {{"u"_v, 1}, {"w"_v, 1}}));
    CHECK(evaluate(s, phi, {{"u"_v, 0}, {"w"_v, 1}}));
    CHECK_FALSE(evaluate(s, phi, {{"u"_v, 0}, {"w"_v, 0}}));

    QfppFormula loop;
    loop.vars = {"u"_v};
    loop.atoms = {{"R", {"u"_v, "u"_v}}};
    CHECK_FALSE(evaluate(s, loop, {{"u"_v, 0}}));
    CHECK(evaluate(s, loop, {{"u"_v, 1}}));
}

TEST_CASE("evaluate checks equalities") {
    Structure s = make_or();
    QfppFormula phi;
    phi.vars = {"u"_v, "w"_v};
    phi.equalities = {{"u"_v, "w"_v}};
    CHECK_FALSE(evaluate(s, phi, {{"u"_v, 0}, {"w"_v, 1}}));
    CHECK(evaluate(s, phi, {{"u"_v, 1}, {"w"_v, 1}}));
}

TEST_CASE("evaluate rejects missing variables and unknown symbols") {
    Structure s = make_or();
    QfppFormula phi;
    phi.vars = {"u"_v, "w"_v};
    phi.atoms = {{"R", {"u"_v, "w"_v}}};
    CHECK_THROWS_AS(evaluate(s, phi, {{"u"_v, 1}}), std::invalid_argument);

    QfppFormula unknown;
    unknown.vars = {"u"_v};
    unknown.atoms = {{"S", {"u"_v}}};
    CHECK_THROWS_AS(evaluate(s, unknown, {{"u"_v, 0}}), std::invalid_argument);
}

TEST_CASE("evaluate is invariant under conjunct reordering") {
    Structure s = make_1in3();
    Rng rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        QfppFormula phi = random_qfpp(100 + static_cast<std::uint64_t>(trial), s, 4, 5);
        QfppFormula shuffled = phi;
        std::shuffle(shuffled.atoms.begin(), shuffled.atoms.end(), rng.engine);
        std::shuffle(shuffled.equalities.begin(), shuffled.equalities.end(), rng.engine);
        any_total_map(s, phi.vars, [&](const Assignment& a) {
            CHECK(evaluate(s, phi, a) == evaluate(s, shuffled, a));
            return false;
        });
    }
}

TEST_CASE("eliminate_equalities merges classes onto least names") {
    QfppFormula phi;
    phi.vars = {"u"_v, "v"_v};
    phi.equalities = {{"u"_v, "v"_v}};
    auto result = eliminate_equalities({"u"_v, "v"_v}, phi);
    CHECK(result.vars == std::set<Variable>{"u"_v});
    CHECK(result.formula.atoms.empty());
    CHECK(result.formula.equalities.empty());
    CHECK(result.merges == 1);
}

TEST_CASE("eliminate_equalities drops reflexive equalities") {
    QfppFormula phi;
    phi.vars = {"u"_v};
    phi.equalities = {{"u"_v, "u"_v}};
    auto result = eliminate_equalities({"u"_v}, phi);
    CHECK(result.vars == std::set<Variable>{"u"_v});
    CHECK(result.merges == 0);
}

TEST_CASE("eliminate_equalities rewrites atoms through chains") {
    QfppFormula phi;
    phi.vars = {"a"_v, "b"_v, "c"_v};
    phi.equalities = {{"a"_v, "b"_v}, {"b"_v, "c"_v}};
    phi.atoms = {{"R", {"c"_v}}};
    auto result = eliminate_equalities({"a"_v, "b"_v, "c"_v}, phi);
    CHECK(result.vars == std::set<Variable>{"a"_v});
    REQUIRE(result.formula.atoms.size() == 1);
    CHECK(result.formula.atoms[0].args == std::vector<Variable>{"a"_v});

    // Surjective satisfiability unchanged, on a structure where R = {(1)}.
    Structure s(2);
    s.add_relation("R", 1, {{1}});
    CHECK(brute_surjectively_satisfiable(s, phi.vars, phi) ==
          brute_surjectively_satisfiable(s, result.vars, result.formula));
}

TEST_CASE("elimination keeps |W'| = |W| - merges and removes all equalities") {
    Structure s = random_structure(11, 2, {{"R", 2}, {"S", 1}});
    for (int trial = 0; trial < 100; ++trial) {
        QfppFormula phi = random_qfpp(500 + static_cast<std::uint64_t>(trial), s, 5, 6);
        auto result = eliminate_equalities(phi.vars, phi);
        CHECK(result.formula.equalities.empty());
        CHECK(result.vars.size() == phi.vars.size() - static_cast<std::size_t>(result.merges));
    }
}

TEST_CASE("elimination preserves brute-force surjective satisfiability") {
    // Seeded random (structure, W, phi) triples at n = 2.
    for (int trial = 0; trial < 200; ++trial) {
        auto seed = static_cast<std::uint64_t>(trial);
        Structure s = random_structure(900 + seed, 2, {{"R", 2}, {"T", 3}});
        QfppFormula phi = random_qfpp(3000 + seed, s, 5, 5);
        auto result = eliminate_equalities(phi.vars, phi);
        CHECK(brute_surjectively_satisfiable(s, phi.vars, phi) ==
              brute_surjectively_satisfiable(s, result.vars, result.formula));
    }
}

TEST_CASE("consistent renaming changes no verdicts") {
    Structure s = make_or();
    for (int trial = 0; trial < 40; ++trial) {
        QfppFormula phi = random_qfpp(7000 + static_cast<std::uint64_t>(trial), s, 4, 4);
        QfppFormula renamed;
        auto rename = [](const Variable& v) { return Variable{"z_" + v.name + "_q"}; };
        for (const auto& v : phi.vars) renamed.vars.insert(rename(v));
        for (const auto& atom : phi.atoms) {
            Atom copy{atom.symbol, {}};
            for (const auto& v : atom.args) copy.args.push_back(rename(v));
            renamed.atoms.push_back(copy);
        }
        for (const auto& eq : phi.equalities)
            renamed.equalities.push_back({rename(eq.left), rename(eq.right)});

        CHECK(brute_satisfiable(s, phi) == brute_satisfiable(s, renamed));
        CHECK(brute_surjectively_satisfiable(s, phi.vars, phi) ==
              brute_surjectively_satisfiable(s, renamed.vars, renamed));

        auto before = eliminate_equalities(phi.vars, phi);
        auto after = eliminate_equalities(renamed.vars, renamed);
        CHECK(brute_surjectively_satisfiable(s, before.vars, before.formula) ==
              brute_surjectively_satisfiable(s, after.vars, after.formula));
    }
}
