#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "scsp/structure.hpp"

namespace scsp {

/// The canonical map G_can: B^n -> P(B), one bitmask per diagonal tuple d in
/// lexicographic rank order. G_can(d) collects every value attained by some
/// n-ary polymorphism whose diagonal is d.
struct GMap {
    int universe_size = 0;
    std::uint64_t structure_fingerprint = 0;
    std::vector<std::uint32_t> entries;  // n^n masks, bit c = element c

    std::uint32_t mask_at(const std::vector<int>& d) const;
    std::vector<int> set_at(const std::vector<int>& d) const;
    std::uint32_t full_mask() const { return (std::uint32_t{1} << universe_size) - 1; }
};

/// Computes G_can by pinned polymorphism searches, never by enumerating all
/// n-ary tables. Membership of c in G_can(d): some cell pinned to c admits a
/// polymorphism whose diagonal cells are pinned to d.
///
/// Restricting to n-ary operations loses nothing: any k-ary clone member's
/// image is the union of the images of its n-ary minors (identify arguments
/// along each map {1..k} -> {1..n}), and every minor has the same diagonal.
/// G_can is therefore the pointwise-minimal map bounding every clone member's
/// image as a function of its diagonal.
GMap canonical_g(const Structure& s, std::int64_t cap = kDefaultPowerCap);

struct CautionVerdict {
    bool cautious = false;
    std::optional<std::vector<int>> witness;  // least d with {d} != B but G_can(d) = B
    GMap gmap;
};

/// The clone Pol(s) is diagonal-cautious iff G_can(d) is a proper subset of B
/// for every tuple d whose value set is a proper subset of B.
CautionVerdict is_diagonal_cautious(const Structure& s, std::int64_t cap = kDefaultPowerCap);

/// One line per diagonal tuple in lexicographic order: the tuple, a colon,
/// the subset.
std::string serialize_gmap(const GMap& g);

}  // namespace scsp
