#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "scsp/caution.hpp"
#include "scsp/formula.hpp"
#include "scsp/operation.hpp"
#include "scsp/structure.hpp"

namespace scsp {

/// Fixed ordering of all n^n tuples of B^n as gadget columns:
///   positions 0..n-1   the constant tuples (0..0), (1..1), .., (n-1..n-1)
///   position  n        the rainbow column (0,1,..,n-1)
///   the rest           remaining tuples in lexicographic order
struct ColumnIndexing {
    int n = 0;
    std::vector<std::vector<int>> columns;   // position -> tuple
    std::vector<int> position_of_rank;       // lexicographic rank -> position

    static ColumnIndexing make(int n);
    int position_of(const std::vector<int>& column) const;
};

/// The quantifier-free gadget formula over one variable per column, whose
/// satisfying assignments are exactly the n-ary polymorphisms of the source
/// structure. Variables: v1..vn on the constant columns, x on the rainbow
/// column, y1..ym on the rest, m = n^n - n - 1.
struct Gadget {
    std::uint64_t structure_fingerprint = 0;
    int n = 0;
    int m = 0;
    std::vector<Variable> v_vars;
    Variable x_var;
    std::vector<Variable> y_vars;
    ColumnIndexing columns;
    QfppFormula formula;  // atoms only

    const Variable& var_at_position(int p) const;

    /// Assignment sending each column variable to the column's i-th coordinate;
    /// it satisfies the formula (it is the i-th projection) and maps x to i.
    Assignment row_assignment(int i) const;
};

/// Builds the gadget as the canonical query of the n-th power structure: one
/// atom per lifted relation tuple, so the atom count is the sum of |R|^n.
/// Requires n >= 2; throws CapError when n^n exceeds cap.
Gadget build_gadget(const Structure& s, std::int64_t cap = kDefaultPowerCap);

/// The n-ary table a satisfying assignment of the gadget encodes.
OperationTable solution_table(const Gadget& g, const Assignment& h);

struct GadgetReport {
    bool condition1 = false;   // caution bound: solutions with a non-surjective
                               // v-block stay inside a proper G_can subset
    bool condition2 = false;   // each row assignment satisfies the formula and
                               // puts value i on x while fixing the v-block
    bool condition3 = false;   // every solution's v-block is the value row of
                               // some unary polymorphism
    bool gcan_containment = false;  // every solution's values lie in G_can(v-block)
    bool complete = false;          // enumeration finished within the cap
    std::uint64_t solution_count = 0;
    std::optional<Assignment> condition1_witness;
    std::optional<Assignment> condition3_witness;
    std::optional<int> condition2_failed_row;

    bool passed() const { return condition1 && condition2 && condition3 && gcan_containment; }
};

/// Checks the three gadget conditions against the enumerated solution set
/// (backtracking, up to solution_cap solutions; incomplete reports are flagged).
GadgetReport verify_gadget(const Structure& s, const Gadget& g,
                           std::uint64_t solution_cap = 1000000,
                           std::int64_t cap = kDefaultPowerCap);

}  // namespace scsp
