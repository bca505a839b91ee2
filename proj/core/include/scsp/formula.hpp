#pragma once

#include <compare>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "scsp/structure.hpp"

namespace scsp {

struct Variable {
    std::string name;

    auto operator<=>(const Variable&) const = default;
};

struct Atom {
    std::string symbol;
    std::vector<Variable> args;

    auto operator<=>(const Atom&) const = default;
};

struct VarEquality {
    Variable left;
    Variable right;

    auto operator<=>(const VarEquality&) const = default;
};

/// A quantifier-free pp-formula: a conjunction of atoms and variable equalities
/// over an explicit variable set. vars may strictly contain the variables that
/// occur in the conjuncts; the unconstrained ones matter for surjectivity.
struct QfppFormula {
    std::set<Variable> vars;
    std::vector<Atom> atoms;
    std::vector<VarEquality> equalities;

    bool operator==(const QfppFormula&) const = default;
};

/// A conjunction of atoms, no equalities. The signature may be the base one or
/// its expansion by constants.
struct CspInstance {
    std::set<Variable> vars;
    std::vector<Atom> atoms;

    bool operator==(const CspInstance&) const = default;
};

/// A conjunction of atoms together with the explicit variable set a surjective
/// assignment must cover.
struct ScspInstance {
    std::set<Variable> vars;
    std::vector<Atom> atoms;

    bool operator==(const ScspInstance&) const = default;
};

using Assignment = std::map<Variable, int>;

QfppFormula to_formula(const CspInstance& inst);
QfppFormula to_formula(const ScspInstance& inst);

/// Standard satisfaction: true iff every atom's argument tuple lands in its
/// relation and every equality holds. Throws std::invalid_argument when the
/// assignment misses a formula variable or a symbol is unknown / of wrong arity.
bool evaluate(const Structure& s, const QfppFormula& phi, const Assignment& a);

struct EliminationResult {
    std::set<Variable> vars;  // surviving variable set W'
    QfppFormula formula;      // atoms only, over representatives
    int merges = 0;           // equalities that unified two distinct classes
};

/// Removes all variable equalities by merging variable classes; the surviving
/// representative of each class is its lexicographically least name. Preserves
/// the existence of a surjective satisfying assignment over any structure.
/// Requires phi.vars to be a subset of W.
EliminationResult eliminate_equalities(const std::set<Variable>& W, const QfppFormula& phi);

}  // namespace scsp
