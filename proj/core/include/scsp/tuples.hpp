#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace scsp {

/// n^k for small non-negative exponents, without overflow surprises at desk scale.
inline std::int64_t ipow(std::int64_t base, int exp) {
    std::int64_t r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

/// Lexicographic rank of a tuple over {0..n-1}; the first coordinate is most significant.
inline int tuple_rank(std::span<const int> tuple, int n) {
    int r = 0;
    for (int x : tuple) r = r * n + x;
    return r;
}

/// Inverse of tuple_rank for arity k.
inline std::vector<int> rank_to_tuple(int rank, int n, int k) {
    std::vector<int> t(static_cast<std::size_t>(k));
    for (int i = k - 1; i >= 0; --i) {
        t[static_cast<std::size_t>(i)] = rank % n;
        rank /= n;
    }
    return t;
}

/// Advances a tuple over {0..n-1} to its lexicographic successor; false after the last one.
inline bool next_tuple(std::vector<int>& t, int n) {
    for (auto it = t.rbegin(); it != t.rend(); ++it) {
        if (++*it < n) return true;
        *it = 0;
    }
    return false;
}

}  // namespace scsp
