#pragma once

#include <cstdint>
#include <optional>

#include "scsp/caution.hpp"
#include "scsp/formula.hpp"
#include "scsp/structure.hpp"

namespace scsp {

enum class PremiseStatus {
    Verified,      // diagonal-cautious: the reduction is equivalence-preserving
    NotCautious,   // construction ran, but the guarantee does not apply
    Unchecked,
};

struct ReduceResult {
    ScspInstance instance;
    PremiseStatus premise = PremiseStatus::Unchecked;
    std::uint64_t structure_fingerprint = 0;
    int gadget_m = 0;
    int vars_before_elimination = 0;  // |U| + n + |U|*m
    int merges = 0;
};

inline constexpr const char* kReservedPrefix = "__g_";

/// The many-one reduction from an instance of CSP over the expansion by
/// constants to an SCSP instance over the base structure:
///   - every constant atom C_b(u) becomes the equality u = v_{b+1},
///   - one gadget copy per input variable u, with u in the x role, a fresh
///     y-block per copy, and a single shared v-block,
///   - equalities are then eliminated.
/// Fresh variables use the reserved "__g_" prefix; inputs already using it are
/// rejected. Requires universe size >= 2 (size-1 universes are decided
/// directly by the solver). When caution is provided its verdict is recorded
/// as the premise status, otherwise the premise is Unchecked.
ReduceResult reduce(const Structure& s, const CspInstance& phi,
                    const std::optional<CautionVerdict>& caution = std::nullopt,
                    std::int64_t cap = kDefaultPowerCap);

}  // namespace scsp
