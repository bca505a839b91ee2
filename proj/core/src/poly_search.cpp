#include "scsp/poly_search.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "scsp/errors.hpp"
#include "scsp/tuples.hpp"

namespace scsp {

namespace {

// One lifted constraint: the values at `cells` must form a tuple of `table`.
struct Lifted {
    const std::vector<std::vector<int>>* table;
    std::vector<int> cells;
};

struct CellSearch {
    int n;
    int cell_count;
    std::vector<Lifted> constraints;
    std::vector<std::vector<int>> watching;  // cell -> constraint indices
    std::vector<std::uint32_t> domain;       // candidate masks
    std::vector<std::pair<int, std::uint32_t>> trail;

    bool prune(int cell, std::uint32_t keep) {
        std::uint32_t next = domain[static_cast<std::size_t>(cell)] & keep;
        if (next == domain[static_cast<std::size_t>(cell)]) return next != 0;
        trail.emplace_back(cell, domain[static_cast<std::size_t>(cell)]);
        domain[static_cast<std::size_t>(cell)] = next;
        return next != 0;
    }

    // Filters every unassigned cell of the constraint against the tuples that
    // are consistent with its assigned cells.
    bool revise(const Lifted& c) {
        std::vector<std::uint32_t> support(c.cells.size(), 0);
        for (const auto& tuple : *c.table) {
            bool consistent = true;
            for (std::size_t j = 0; j < c.cells.size(); ++j) {
                int cell = c.cells[j];
                int value = tuple[j];
                if (!(domain[static_cast<std::size_t>(cell)] & (std::uint32_t{1} << value))) {
                    consistent = false;
                    break;
                }
            }
            if (!consistent) continue;
            for (std::size_t j = 0; j < c.cells.size(); ++j)
                support[j] |= std::uint32_t{1} << tuple[j];
        }
        for (std::size_t j = 0; j < c.cells.size(); ++j)
            if (!prune(c.cells[j], support[j])) return false;
        return true;
    }

    bool propagate(int cell) {
        for (int ci : watching[static_cast<std::size_t>(cell)])
            if (!revise(constraints[static_cast<std::size_t>(ci)])) return false;
        return true;
    }

    bool search(int depth) {
        if (depth == cell_count) return true;
        std::uint32_t candidates = domain[static_cast<std::size_t>(depth)];
        for (int v = 0; v < n; ++v) {
            if (!(candidates & (std::uint32_t{1} << v))) continue;
            std::size_t mark = trail.size();
            trail.emplace_back(depth, domain[static_cast<std::size_t>(depth)]);
            domain[static_cast<std::size_t>(depth)] = std::uint32_t{1} << v;
            if (propagate(depth) && search(depth + 1)) return true;
            while (trail.size() > mark) {
                auto [cell, mask] = trail.back();
                trail.pop_back();
                domain[static_cast<std::size_t>(cell)] = mask;
            }
        }
        return false;
    }
};

}  // namespace

std::optional<OperationTable> exists_polymorphism(const Structure& s, int arity,
                                                  const CellPins& pins, std::int64_t cap) {
    const int n = s.universe_size;
    std::int64_t cells = ipow(n, arity);
    if (cells > cap)
        throw CapError("table has " + std::to_string(cells) + " cells, cap is " + std::to_string(cap));

    CellSearch search;
    search.n = n;
    search.cell_count = static_cast<int>(cells);
    search.domain.assign(static_cast<std::size_t>(cells), (std::uint32_t{1} << n) - 1);
    search.watching.resize(static_cast<std::size_t>(cells));

    for (const auto& [cell, value] : pins) {
        if (cell < 0 || cell >= cells) throw std::invalid_argument("pin cell out of range");
        if (value < 0 || value >= n) throw std::invalid_argument("pin value out of range");
        search.domain[static_cast<std::size_t>(cell)] &= std::uint32_t{1} << value;
        if (search.domain[static_cast<std::size_t>(cell)] == 0) return std::nullopt;
    }

    // The lifted constraints are the relations of the arity-th power: the cell
    // ranks of each lifted tuple must be filled with a base-relation tuple.
    Structure power = power_structure(s, arity, cap);
    for (std::size_t r = 0; r < power.relations.size(); ++r) {
        for (const auto& lifted_tuple : power.relations[r]) {
            Lifted c{&s.relations[r], lifted_tuple};
            int ci = static_cast<int>(search.constraints.size());
            for (int cell : c.cells) {
                auto& watchers = search.watching[static_cast<std::size_t>(cell)];
                if (watchers.empty() || watchers.back() != ci) watchers.push_back(ci);
            }
            search.constraints.push_back(std::move(c));
        }
    }

    // Initial pass so that pins and unary constraints take effect up front.
    for (const auto& c : search.constraints)
        if (!search.revise(c)) return std::nullopt;

    if (!search.search(0)) return std::nullopt;

    OperationTable f{n, arity, {}};
    f.values.reserve(static_cast<std::size_t>(cells));
    for (int cell = 0; cell < cells; ++cell) {
        std::uint32_t mask = search.domain[static_cast<std::size_t>(cell)];
        f.values.push_back(std::countr_zero(mask));
    }
    return f;
}

std::vector<OperationTable> unary_polymorphisms(const Structure& s) {
    const int n = s.universe_size;
    std::vector<OperationTable> monoid;
    OperationTable f{n, 1, std::vector<int>(static_cast<std::size_t>(n), 0)};
    while (true) {
        if (is_polymorphism(s, f)) monoid.push_back(f);
        if (!next_tuple(f.values, n)) break;
    }

    // The monoid laws hold for any structure; failing them means the
    // enumeration itself is broken.
    auto member = [&monoid](const OperationTable& g) {
        return std::binary_search(monoid.begin(), monoid.end(), g);
    };
    for (const auto& u : monoid) {
        for (const auto& v : monoid) {
            OperationTable comp{n, 1, std::vector<int>(static_cast<std::size_t>(n))};
            for (int b = 0; b < n; ++b)
                comp.values[static_cast<std::size_t>(b)] =
                    u.values[static_cast<std::size_t>(v.values[static_cast<std::size_t>(b)])];
            if (!member(comp))
                throw std::logic_error("unary polymorphisms not closed under composition");
        }
        if (static_cast<int>(image(u).size()) == n) {
            OperationTable inverse{n, 1, std::vector<int>(static_cast<std::size_t>(n))};
            for (int b = 0; b < n; ++b)
                inverse.values[static_cast<std::size_t>(u.values[static_cast<std::size_t>(b)])] = b;
            if (!member(inverse))
                throw std::logic_error("bijective unary polymorphism without inverse in the monoid");
        }
    }
    return monoid;
}

}  // namespace scsp
