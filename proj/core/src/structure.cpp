#include "scsp/structure.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "scsp/errors.hpp"
#include "scsp/tuples.hpp"

namespace scsp {

int Signature::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < symbols.size(); ++i)
        if (symbols[i].name == name) return static_cast<int>(i);
    return -1;
}

void Structure::add_relation(std::string name, int arity, std::vector<std::vector<int>> tuples) {
    std::sort(tuples.begin(), tuples.end());
    tuples.erase(std::unique(tuples.begin(), tuples.end()), tuples.end());
    signature.symbols.push_back({std::move(name), arity});
    relations.push_back(std::move(tuples));
}

const std::vector<std::vector<int>>& Structure::relation(std::string_view name) const {
    int idx = signature.index_of(name);
    if (idx < 0) throw std::invalid_argument("unknown relation symbol '" + std::string(name) + "'");
    return relations[static_cast<std::size_t>(idx)];
}

std::vector<std::string> validate_structure(const Structure& s) {
    std::vector<std::string> out;
    if (s.universe_size < 1) out.push_back("universe size must be positive");
    if (s.relations.size() != s.signature.symbols.size())
        out.push_back("relation table count does not match the signature");

    std::set<std::string> seen;
    for (const auto& sym : s.signature.symbols) {
        if (sym.name.empty()) out.push_back("empty relation symbol name");
        if (sym.arity < 1) out.push_back("symbol '" + sym.name + "': arity must be >= 1");
        if (!seen.insert(sym.name).second) out.push_back("duplicate symbol '" + sym.name + "'");
    }

    std::size_t count = std::min(s.relations.size(), s.signature.symbols.size());
    for (std::size_t r = 0; r < count; ++r) {
        const auto& sym = s.signature.symbols[r];
        const auto& table = s.relations[r];
        for (const auto& tuple : table) {
            if (static_cast<int>(tuple.size()) != sym.arity) {
                out.push_back("relation '" + sym.name + "': tuple arity mismatch");
                continue;
            }
            for (int entry : tuple)
                if (entry < 0 || entry >= s.universe_size)
                    out.push_back("relation '" + sym.name + "': out-of-range entry " +
                                  std::to_string(entry));
        }
        if (!std::is_sorted(table.begin(), table.end()))
            out.push_back("relation '" + sym.name + "': tuples not in canonical sorted order");
        if (std::adjacent_find(table.begin(), table.end()) != table.end())
            out.push_back("relation '" + sym.name + "': duplicate tuple");
    }
    return out;
}

std::string constant_symbol_name(int b) { return "C_" + std::to_string(b); }

Structure expand_with_constants(const Structure& s) {
    Structure out = s;
    for (int b = 0; b < s.universe_size; ++b) {
        std::string name = constant_symbol_name(b);
        if (s.signature.index_of(name) >= 0)
            throw std::invalid_argument("signature already contains symbol '" + name + "'");
        out.add_relation(std::move(name), 1, {{b}});
    }
    return out;
}

Structure power_structure(const Structure& s, int k, std::int64_t cap) {
    const int n = s.universe_size;
    std::int64_t cells = ipow(n, k);
    if (cells > cap)
        throw CapError("power universe has " + std::to_string(cells) + " elements, cap is " +
                       std::to_string(cap));

    Structure out(static_cast<int>(cells));
    for (std::size_t r = 0; r < s.signature.symbols.size(); ++r) {
        const auto& sym = s.signature.symbols[r];
        const auto& table = s.relations[r];
        std::vector<std::vector<int>> lifted;

        // One lifted tuple per choice of k source tuples: coordinate i of the
        // j-th entry is the j-th entry of the i-th chosen source tuple.
        if (!table.empty()) {
            std::vector<std::size_t> choice(static_cast<std::size_t>(k), 0);
            std::vector<int> column(static_cast<std::size_t>(k));
            while (true) {
                std::vector<int> entry(static_cast<std::size_t>(sym.arity));
                for (int j = 0; j < sym.arity; ++j) {
                    for (int i = 0; i < k; ++i)
                        column[static_cast<std::size_t>(i)] =
                            table[choice[static_cast<std::size_t>(i)]][static_cast<std::size_t>(j)];
                    entry[static_cast<std::size_t>(j)] = tuple_rank(column, n);
                }
                lifted.push_back(std::move(entry));

                int pos = k - 1;
                while (pos >= 0 && ++choice[static_cast<std::size_t>(pos)] == table.size())
                    choice[static_cast<std::size_t>(pos--)] = 0;
                if (pos < 0) break;
            }
        }
        out.add_relation(sym.name, sym.arity, std::move(lifted));
    }
    return out;
}

}  // namespace scsp
