#include "scsp/operation.hpp"

#include <algorithm>
#include <stdexcept>

#include "scsp/tuples.hpp"

namespace scsp {

int OperationTable::apply(std::span<const int> args) const {
    return values[static_cast<std::size_t>(tuple_rank(args, universe_size))];
}

OperationTable projection_table(int n, int k, int coordinate) {
    OperationTable f{n, k, std::vector<int>(static_cast<std::size_t>(ipow(n, k)))};
    std::vector<int> t(static_cast<std::size_t>(k), 0);
    std::size_t rank = 0;
    do {
        f.values[rank++] = t[static_cast<std::size_t>(coordinate)];
    } while (next_tuple(t, n));
    return f;
}

OperationTable identity_table(int n) { return projection_table(n, 1, 0); }

OperationTable diagonal(const OperationTable& f) {
    OperationTable g{f.universe_size, 1, std::vector<int>(static_cast<std::size_t>(f.universe_size))};
    std::vector<int> t(static_cast<std::size_t>(f.arity));
    for (int b = 0; b < f.universe_size; ++b) {
        std::fill(t.begin(), t.end(), b);
        g.values[static_cast<std::size_t>(b)] = f.apply(t);
    }
    return g;
}

std::vector<int> image(const OperationTable& f) {
    std::vector<bool> seen(static_cast<std::size_t>(f.universe_size), false);
    for (int v : f.values) seen[static_cast<std::size_t>(v)] = true;
    std::vector<int> out;
    for (int b = 0; b < f.universe_size; ++b)
        if (seen[static_cast<std::size_t>(b)]) out.push_back(b);
    return out;
}

std::optional<int> essentially_unary_coordinate(const OperationTable& f) {
    OperationTable fhat = diagonal(f);
    for (int i = 0; i < f.arity; ++i) {
        bool ok = true;
        std::vector<int> t(static_cast<std::size_t>(f.arity), 0);
        std::size_t rank = 0;
        do {
            if (f.values[rank++] != fhat.values[static_cast<std::size_t>(t[static_cast<std::size_t>(i)])]) {
                ok = false;
                break;
            }
        } while (next_tuple(t, f.universe_size));
        if (ok) return i;
    }
    return std::nullopt;
}

bool is_essentially_unary(const OperationTable& f) {
    return essentially_unary_coordinate(f).has_value();
}

namespace {

// Visits every choice of k tuples from the relation; returns false from the
// visitor to stop early.
template <typename Visitor>
bool for_each_choice(const std::vector<std::vector<int>>& table, int k, Visitor&& visit) {
    if (table.empty()) return true;
    std::vector<std::size_t> choice(static_cast<std::size_t>(k), 0);
    while (true) {
        if (!visit(choice)) return false;
        int pos = k - 1;
        while (pos >= 0 && ++choice[static_cast<std::size_t>(pos)] == table.size())
            choice[static_cast<std::size_t>(pos--)] = 0;
        if (pos < 0) return true;
    }
}

}  // namespace

bool is_polymorphism(const Structure& s, const OperationTable& f) {
    if (f.universe_size != s.universe_size)
        throw std::invalid_argument("operation and structure universes differ");
    std::vector<int> column(static_cast<std::size_t>(f.arity));
    for (std::size_t r = 0; r < s.signature.symbols.size(); ++r) {
        const auto& table = s.relations[r];
        int arity = s.signature.symbols[r].arity;
        bool ok = for_each_choice(table, f.arity, [&](const std::vector<std::size_t>& choice) {
            std::vector<int> result(static_cast<std::size_t>(arity));
            for (int j = 0; j < arity; ++j) {
                for (int i = 0; i < f.arity; ++i)
                    column[static_cast<std::size_t>(i)] =
                        table[choice[static_cast<std::size_t>(i)]][static_cast<std::size_t>(j)];
                result[static_cast<std::size_t>(j)] = f.apply(column);
            }
            return std::binary_search(table.begin(), table.end(), result);
        });
        if (!ok) return false;
    }
    return true;
}

std::vector<PolymorphismViolation> polymorphism_violations(const Structure& s, const OperationTable& f) {
    if (f.universe_size != s.universe_size)
        throw std::invalid_argument("operation and structure universes differ");
    std::vector<PolymorphismViolation> out;
    std::vector<int> column(static_cast<std::size_t>(f.arity));
    for (std::size_t r = 0; r < s.signature.symbols.size(); ++r) {
        const auto& table = s.relations[r];
        int arity = s.signature.symbols[r].arity;
        for_each_choice(table, f.arity, [&](const std::vector<std::size_t>& choice) {
            std::vector<int> result(static_cast<std::size_t>(arity));
            for (int j = 0; j < arity; ++j) {
                for (int i = 0; i < f.arity; ++i)
                    column[static_cast<std::size_t>(i)] =
                        table[choice[static_cast<std::size_t>(i)]][static_cast<std::size_t>(j)];
                result[static_cast<std::size_t>(j)] = f.apply(column);
            }
            if (!std::binary_search(table.begin(), table.end(), result)) {
                PolymorphismViolation violation{s.signature.symbols[r].name, {}, result};
                for (std::size_t i = 0; i < choice.size(); ++i)
                    violation.sources.push_back(table[choice[i]]);
                out.push_back(std::move(violation));
            }
            return true;
        });
    }
    return out;
}

}  // namespace scsp
