#pragma once

#include "scsp/structure.hpp"

namespace scsp::testing {

// R = { (a,b) : a OR b }, without (0,0).
inline Structure make_or() {
    Structure s(2);
    s.add_relation("R", 2, {{0, 1}, {1, 0}, {1, 1}});
    return s;
}

// Positive one-in-three: exactly one coordinate is 1.
inline Structure make_1in3() {
    Structure s(2);
    s.add_relation("R", 3, {{0, 0, 1}, {0, 1, 0}, {1, 0, 0}});
    return s;
}

// The disequality structure on three elements.
inline Structure make_neq3() {
    Structure s(3);
    std::vector<std::vector<int>> tuples;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            if (a != b) tuples.push_back({a, b});
    s.add_relation("E", 2, std::move(tuples));
    return s;
}

// A structure that already carries every singleton as a relation (under names
// that do not collide with the constant symbols), plus one binary relation.
inline Structure make_all_singletons(int n) {
    Structure s(n);
    std::vector<std::vector<int>> eq;
    for (int b = 0; b < n; ++b) eq.push_back({b, b});
    s.add_relation("Eq", 2, std::move(eq));
    for (int b = 0; b < n; ++b) s.add_relation("U" + std::to_string(b), 1, {{b}});
    return s;
}

}  // namespace scsp::testing
