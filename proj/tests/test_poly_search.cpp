#include <algorithm>

#include "doctest.h"
#include "scsp/errors.hpp"
#include "scsp/poly_search.hpp"
#include "scsp/random_gen.hpp"
#include "scsp/tuples.hpp"
#include "scsp/verify.hpp"
#include "support/structures.hpp"

using namespace scsp;
using namespace scsp::testing;

TEST_CASE("unpinned search always succeeds") {
    for (const Structure& s : {make_or(), make_1in3(), make_neq3(), make_all_singletons(2)}) {
        auto f = exists_polymorphism(s, 2);
        REQUIRE(f.has_value());
        CHECK(is_polymorphism(s, *f));
    }
    for (int trial = 0; trial < 25; ++trial) {
        Structure s = random_structure(40 + static_cast<std::uint64_t>(trial), 2, {{"R", 2}, {"T", 3}});
        auto f = exists_polymorphism(s, 2);
        REQUIRE(f.has_value());
        CHECK(is_polymorphism(s, *f));
    }
}

TEST_CASE("pinned search on the one-in-three structure") {
    Structure s = make_1in3();
    // Brute force first: the only binary polymorphisms are the projections.
    auto all = all_polymorphisms(s, 2);
    REQUIRE(all.size() == 2);
    CHECK(all[0] == projection_table(2, 2, 0));
    CHECK(all[1] == projection_table(2, 2, 1));

    int cell01 = tuple_rank(std::vector<int>{0, 1}, 2);
    int cell10 = tuple_rank(std::vector<int>{1, 0}, 2);

    // Neither projection sends both mixed cells to 1.
    CHECK_FALSE(exists_polymorphism(s, 2, {{cell01, 1}, {cell10, 1}}).has_value());

    auto second = exists_polymorphism(s, 2, {{cell01, 1}, {cell10, 0}});
    REQUIRE(second.has_value());
    CHECK(*second == projection_table(2, 2, 1));
}

TEST_CASE("pinned search agrees with table enumeration on random structures") {
    for (int trial = 0; trial < 20; ++trial) {
        Structure s = random_structure(600 + static_cast<std::uint64_t>(trial), 2, {{"R", 3}});
        auto all = all_polymorphisms(s, 2);
        Rng rng(77 + static_cast<std::uint64_t>(trial));
        for (int q = 0; q < 10; ++q) {
            CellPins pins;
            for (int cell = 0; cell < 4; ++cell)
                if (rng.chance(0.5)) pins[cell] = rng.below(2);
            bool expected = std::any_of(all.begin(), all.end(), [&](const OperationTable& f) {
                for (const auto& [cell, value] : pins)
                    if (f.values[static_cast<std::size_t>(cell)] != value) return false;
                return true;
            });
            auto found = exists_polymorphism(s, 2, pins);
            CHECK(found.has_value() == expected);
            if (found) {
                CHECK(is_polymorphism(s, *found));
                for (const auto& [cell, value] : pins)
                    CHECK(found->values[static_cast<std::size_t>(cell)] == value);
            }
        }
    }
}

TEST_CASE("search respects the cell cap") {
    CHECK_THROWS_AS(exists_polymorphism(make_neq3(), 6), CapError);
}

TEST_CASE("unary monoid of the disequality structure is the symmetric group") {
    auto monoid = unary_polymorphisms(make_neq3());
    CHECK(monoid.size() == 6);
    for (const auto& u : monoid) CHECK(image(u).size() == 3);
}

TEST_CASE("unary monoid of one-in-three is trivial") {
    auto monoid = unary_polymorphisms(make_1in3());
    REQUIRE(monoid.size() == 1);
    CHECK(monoid[0] == identity_table(2));
}

TEST_CASE("singleton relations force the identity") {
    for (int n : {2, 3}) {
        auto monoid = unary_polymorphisms(make_all_singletons(n));
        REQUIRE(monoid.size() == 1);
        CHECK(monoid[0] == identity_table(n));
    }
}

TEST_CASE("unary monoid matches direct filtering on random structures") {
    for (int trial = 0; trial < 25; ++trial) {
        Structure s = random_structure(1200 + static_cast<std::uint64_t>(trial), 3, {{"R", 2}});
        auto monoid = unary_polymorphisms(s);
        auto direct = all_polymorphisms(s, 1);
        CHECK(monoid == direct);
    }
}
