#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "scsp/structure.hpp"

namespace scsp {

/// A finitary operation f: B^k -> B stored as a value array indexed by the
/// lexicographic rank of the input tuple.
struct OperationTable {
    int universe_size = 0;
    int arity = 1;
    std::vector<int> values;  // length n^k

    int apply(std::span<const int> args) const;

    auto operator<=>(const OperationTable&) const = default;
};

OperationTable projection_table(int n, int k, int coordinate);
OperationTable identity_table(int n);

/// The unary diagonal b -> f(b,..,b).
OperationTable diagonal(const OperationTable& f);

/// Exact set of attained values, ascending.
std::vector<int> image(const OperationTable& f);

/// The least coordinate i with f(b_1..b_k) = fhat(b_i) everywhere, if any.
std::optional<int> essentially_unary_coordinate(const OperationTable& f);
bool is_essentially_unary(const OperationTable& f);

struct PolymorphismViolation {
    std::string symbol;
    std::vector<std::vector<int>> sources;  // the k chosen relation tuples
    std::vector<int> result;                // their coordinatewise image, not in the relation
};

/// True iff f applied coordinatewise to any choice of tuples of each relation
/// stays inside that relation. Early exit; use polymorphism_violations for the
/// full witness list.
bool is_polymorphism(const Structure& s, const OperationTable& f);
std::vector<PolymorphismViolation> polymorphism_violations(const Structure& s, const OperationTable& f);

}  // namespace scsp
