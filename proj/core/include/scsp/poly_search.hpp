#pragma once

#include <cstdint>
#include <map>
#include <optional>

#include "scsp/operation.hpp"
#include "scsp/structure.hpp"

namespace scsp {

/// Partial table: lexicographic cell rank -> required value.
using CellPins = std::map<int, int>;

/// Searches for a k-ary polymorphism of s extending the pins. Backtracking over
/// the n^k table cells in rank order with ascending values, forward-pruned
/// against the lifted constraints of each relation; the first table found is
/// therefore deterministic. Throws CapError when n^k exceeds cap.
std::optional<OperationTable> exists_polymorphism(const Structure& s, int arity,
                                                  const CellPins& pins = {},
                                                  std::int64_t cap = kDefaultPowerCap);

/// The exact unary polymorphism monoid, by brute force over all n^n unary
/// tables, in ascending table order. Verifies closure under composition and
/// that each bijective member's inverse is present.
std::vector<OperationTable> unary_polymorphisms(const Structure& s);

}  // namespace scsp
