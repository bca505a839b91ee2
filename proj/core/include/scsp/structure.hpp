#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace scsp {

struct RelationSymbol {
    std::string name;
    int arity = 1;

    auto operator<=>(const RelationSymbol&) const = default;
};

struct Signature {
    std::vector<RelationSymbol> symbols;

    /// Index of the named symbol, or -1 when absent.
    int index_of(std::string_view name) const;

    auto operator<=>(const Signature&) const = default;
};

/// A finite relational structure. The universe is {0..n-1}; the fixed element
/// enumeration is the sorted one, i.e. the i-th enumerated element is i-1.
/// Relation tables are kept sorted and duplicate-free.
struct Structure {
    Signature signature;
    int universe_size = 0;
    std::vector<std::vector<std::vector<int>>> relations;  // parallel to signature.symbols

    Structure() = default;
    explicit Structure(int n) : universe_size(n) {}

    /// Appends a relation, normalizing its tuple set to sorted order without duplicates.
    void add_relation(std::string name, int arity, std::vector<std::vector<int>> tuples);

    /// Table of the named relation; throws std::invalid_argument when absent.
    const std::vector<std::vector<int>>& relation(std::string_view name) const;

    bool operator==(const Structure&) const = default;
};

/// Every invariant violation as a human-readable diagnostic; empty means valid.
std::vector<std::string> validate_structure(const Structure& s);

/// Name of the unary singleton symbol for element b.
std::string constant_symbol_name(int b);

/// The expansion by constants: fresh unary symbols C_0..C_{n-1} with C_b = {(b)}.
/// Throws std::invalid_argument if the signature already uses one of those names.
Structure expand_with_constants(const Structure& s);

inline constexpr std::int64_t kDefaultPowerCap = 256;  // max cells of a power universe

/// The k-th power structure: universe = all k-tuples over {0..n-1} indexed by
/// lexicographic rank; a lifted tuple is in a relation iff every coordinate row
/// is a tuple of the base relation. Throws CapError when n^k exceeds cap.
Structure power_structure(const Structure& s, int k, std::int64_t cap = kDefaultPowerCap);

}  // namespace scsp
