#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "scsp/formula.hpp"
#include "scsp/structure.hpp"

namespace scsp {

enum class Verdict { Yes, No, BudgetExceeded };

const char* verdict_name(Verdict v);

struct SolveStats {
    std::uint64_t nodes = 0;
    double wall_seconds = 0.0;
};

struct SolveResult {
    Verdict verdict = Verdict::No;
    std::optional<Assignment> witness;  // present iff Yes; re-checked under evaluate
    SolveStats stats;
};

inline constexpr std::uint64_t kDefaultNodeBudget = 10000000;

/// Complete backtracking with per-variable candidate pruning against unary
/// constraints and forward pruning of future domains on every assignment.
/// Variable order is lexicographic by name, values ascending, so verdicts and
/// witnesses are deterministic. Equalities in the general overload are handled
/// natively as binary constraints.
SolveResult solve_csp(const Structure& s, const CspInstance& inst,
                      std::uint64_t budget = kDefaultNodeBudget);
SolveResult solve_csp(const Structure& s, const QfppFormula& phi,
                      std::uint64_t budget = kDefaultNodeBudget);

/// As solve_csp but decides surjective satisfiability of (U, phi): prunes any
/// branch where the used distinct values plus the unassigned variables cannot
/// cover the universe.
SolveResult solve_scsp(const Structure& s, const ScspInstance& inst,
                       std::uint64_t budget = kDefaultNodeBudget);
SolveResult solve_scsp(const Structure& s, const std::set<Variable>& U, const QfppFormula& phi,
                       std::uint64_t budget = kDefaultNodeBudget);

struct EnumerationResult {
    std::vector<Assignment> solutions;  // lexicographic in the value vector
    bool complete = false;              // false when truncated at the cap
    std::uint64_t nodes = 0;
};

/// All satisfying assignments of phi over phi.vars, in deterministic order,
/// truncated at max_solutions.
EnumerationResult enumerate_solutions(const Structure& s, const QfppFormula& phi,
                                      std::uint64_t max_solutions = 1000000);

}  // namespace scsp
