#include "scsp/caution.hpp"

#include <sstream>
#include <stdexcept>

#include "scsp/errors.hpp"
#include "scsp/operation.hpp"
#include "scsp/poly_search.hpp"
#include "scsp/text_io.hpp"
#include "scsp/tuples.hpp"

namespace scsp {

std::uint32_t GMap::mask_at(const std::vector<int>& d) const {
    if (static_cast<int>(d.size()) != universe_size)
        throw std::invalid_argument("diagonal tuple has wrong arity");
    return entries[static_cast<std::size_t>(tuple_rank(d, universe_size))];
}

std::vector<int> GMap::set_at(const std::vector<int>& d) const {
    std::uint32_t mask = mask_at(d);
    std::vector<int> out;
    for (int c = 0; c < universe_size; ++c)
        if (mask & (std::uint32_t{1} << c)) out.push_back(c);
    return out;
}

GMap canonical_g(const Structure& s, std::int64_t cap) {
    const int n = s.universe_size;
    std::int64_t cells = ipow(n, n);
    if (cells > cap)
        throw CapError("canonical G needs " + std::to_string(cells) + " table cells, cap is " +
                       std::to_string(cap));

    // Diagonal cells: the ranks of the constant tuples (b,..,b).
    std::vector<int> diagonal_cell(static_cast<std::size_t>(n));
    for (int b = 0; b < n; ++b) {
        std::vector<int> constant(static_cast<std::size_t>(n), b);
        diagonal_cell[static_cast<std::size_t>(b)] = tuple_rank(constant, n);
    }

    GMap g;
    g.universe_size = n;
    g.structure_fingerprint = fingerprint(s);
    g.entries.assign(static_cast<std::size_t>(cells), 0);

    std::vector<int> d(static_cast<std::size_t>(n), 0);
    do {
        CellPins pins;
        for (int b = 0; b < n; ++b)
            pins[diagonal_cell[static_cast<std::size_t>(b)]] = d[static_cast<std::size_t>(b)];

        std::uint32_t mask = 0;
        // Any table realizing the diagonal witnesses every value it attains.
        if (auto f = exists_polymorphism(s, n, pins, cap)) {
            for (int v : f->values) mask |= std::uint32_t{1} << v;
            for (int c = 0; c < n; ++c) {
                if (mask & (std::uint32_t{1} << c)) continue;
                for (int cell = 0; cell < cells; ++cell) {
                    auto pinned = pins.find(cell);
                    if (pinned != pins.end()) continue;  // conflicting pin or already witnessed
                    CellPins with_value = pins;
                    with_value[cell] = c;
                    if (exists_polymorphism(s, n, with_value, cap)) {
                        mask |= std::uint32_t{1} << c;
                        break;
                    }
                }
            }
        }
        g.entries[static_cast<std::size_t>(tuple_rank(d, n))] = mask;
    } while (next_tuple(d, n));

    return g;
}

CautionVerdict is_diagonal_cautious(const Structure& s, std::int64_t cap) {
    CautionVerdict verdict;
    verdict.gmap = canonical_g(s, cap);
    verdict.cautious = true;

    const int n = s.universe_size;
    const std::uint32_t full = verdict.gmap.full_mask();
    std::vector<int> d(static_cast<std::size_t>(n), 0);
    do {
        std::uint32_t values = 0;
        for (int b : d) values |= std::uint32_t{1} << b;
        if (values == full) continue;
        if (verdict.gmap.entries[static_cast<std::size_t>(tuple_rank(d, n))] == full) {
            verdict.cautious = false;
            verdict.witness = d;  // lexicographically least, by enumeration order
            break;
        }
    } while (next_tuple(d, n));

    return verdict;
}

std::string serialize_gmap(const GMap& g) {
    std::ostringstream out;
    const int n = g.universe_size;
    std::vector<int> d(static_cast<std::size_t>(n), 0);
    do {
        for (std::size_t i = 0; i < d.size(); ++i) out << (i ? " " : "") << d[i];
        out << " :";
        for (int c : g.set_at(d)) out << " " << c;
        out << "\n";
    } while (next_tuple(d, n));
    return out.str();
}

}  // namespace scsp
