#include "scsp/gadget.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "scsp/errors.hpp"
#include "scsp/poly_search.hpp"
#include "scsp/solver.hpp"
#include "scsp/text_io.hpp"
#include "scsp/tuples.hpp"

namespace scsp {

ColumnIndexing ColumnIndexing::make(int n) {
    ColumnIndexing ci;
    ci.n = n;
    std::int64_t total = ipow(n, n);
    ci.position_of_rank.assign(static_cast<std::size_t>(total), -1);

    auto push = [&ci, n](std::vector<int> column) {
        int rank = tuple_rank(column, n);
        ci.position_of_rank[static_cast<std::size_t>(rank)] = static_cast<int>(ci.columns.size());
        ci.columns.push_back(std::move(column));
    };

    for (int b = 0; b < n; ++b) push(std::vector<int>(static_cast<std::size_t>(n), b));
    std::vector<int> rainbow(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) rainbow[static_cast<std::size_t>(i)] = i;
    push(std::move(rainbow));

    std::vector<int> t(static_cast<std::size_t>(n), 0);
    do {
        if (ci.position_of_rank[static_cast<std::size_t>(tuple_rank(t, n))] < 0) push(t);
    } while (next_tuple(t, n));
    return ci;
}

int ColumnIndexing::position_of(const std::vector<int>& column) const {
    return position_of_rank[static_cast<std::size_t>(tuple_rank(column, n))];
}

const Variable& Gadget::var_at_position(int p) const {
    if (p < n) return v_vars[static_cast<std::size_t>(p)];
    if (p == n) return x_var;
    return y_vars[static_cast<std::size_t>(p - n - 1)];
}

Assignment Gadget::row_assignment(int i) const {
    Assignment a;
    for (std::size_t p = 0; p < columns.columns.size(); ++p)
        a[var_at_position(static_cast<int>(p))] = columns.columns[p][static_cast<std::size_t>(i)];
    return a;
}

Gadget build_gadget(const Structure& s, std::int64_t cap) {
    const int n = s.universe_size;
    if (n < 2)
        throw std::invalid_argument(
            "gadget needs a universe of size >= 2; size-1 instances are decided directly");

    Gadget g;
    g.structure_fingerprint = fingerprint(s);
    g.n = n;
    g.m = static_cast<int>(ipow(n, n)) - n - 1;
    g.columns = ColumnIndexing::make(n);

    for (int i = 1; i <= n; ++i) g.v_vars.push_back(Variable{"v" + std::to_string(i)});
    g.x_var = Variable{"x"};
    int width = static_cast<int>(std::to_string(g.m).size());
    for (int j = 1; j <= g.m; ++j) {
        std::string num = std::to_string(j);
        g.y_vars.push_back(Variable{"y" + std::string(static_cast<std::size_t>(width) - num.size(), '0') + num});
    }

    for (std::size_t p = 0; p < g.columns.columns.size(); ++p)
        g.formula.vars.insert(g.var_at_position(static_cast<int>(p)));

    // Canonical query of the n-th power: one atom per lifted relation tuple,
    // with the lifted entries translated from column ranks to column variables.
    Structure power = power_structure(s, n, cap);
    for (std::size_t r = 0; r < power.relations.size(); ++r) {
        const auto& name = power.signature.symbols[r].name;
        for (const auto& lifted : power.relations[r]) {
            Atom atom{name, {}};
            atom.args.reserve(lifted.size());
            for (int rank : lifted)
                atom.args.push_back(g.var_at_position(g.columns.position_of_rank[static_cast<std::size_t>(rank)]));
            g.formula.atoms.push_back(std::move(atom));
        }
    }
    return g;
}

OperationTable solution_table(const Gadget& g, const Assignment& h) {
    OperationTable f{g.n, g.n, std::vector<int>(g.columns.columns.size())};
    for (std::size_t rank = 0; rank < f.values.size(); ++rank) {
        const Variable& var = g.var_at_position(g.columns.position_of_rank[rank]);
        f.values[rank] = h.at(var);
    }
    return f;
}

GadgetReport verify_gadget(const Structure& s, const Gadget& g, std::uint64_t solution_cap,
                           std::int64_t cap) {
    if (g.structure_fingerprint != fingerprint(s))
        throw std::invalid_argument("gadget was not built from this structure");

    GadgetReport report;
    const int n = g.n;

    // Condition (2): the i-th row is a satisfying assignment that fixes the
    // v-block to the element enumeration and gives x the value i.
    report.condition2 = true;
    for (int i = 0; i < n; ++i) {
        Assignment row = g.row_assignment(i);
        bool ok = evaluate(s, g.formula, row) && row.at(g.x_var) == i;
        for (int j = 0; j < n && ok; ++j) ok = row.at(g.v_vars[static_cast<std::size_t>(j)]) == j;
        if (!ok) {
            report.condition2 = false;
            report.condition2_failed_row = i;
            break;
        }
    }

    GMap gmap = canonical_g(s, cap);
    auto unary = unary_polymorphisms(s);
    std::vector<std::vector<int>> unary_rows;
    unary_rows.reserve(unary.size());
    for (const auto& u : unary) unary_rows.push_back(u.values);
    std::sort(unary_rows.begin(), unary_rows.end());

    EnumerationResult solutions = enumerate_solutions(s, g.formula, solution_cap);
    report.complete = solutions.complete;
    report.solution_count = solutions.solutions.size();

    report.condition1 = true;
    report.condition3 = true;
    report.gcan_containment = true;
    const std::uint32_t full = gmap.full_mask();

    for (const auto& h : solutions.solutions) {
        std::vector<int> d(static_cast<std::size_t>(n));
        std::uint32_t d_values = 0;
        for (int i = 0; i < n; ++i) {
            d[static_cast<std::size_t>(i)] = h.at(g.v_vars[static_cast<std::size_t>(i)]);
            d_values |= std::uint32_t{1} << d[static_cast<std::size_t>(i)];
        }
        std::uint32_t attained = 0;
        for (const auto& [var, value] : h) attained |= std::uint32_t{1} << value;
        std::uint32_t bound = gmap.mask_at(d);

        // Containment of the solution's values in G_can(d) cross-checks the
        // pinned search against the enumeration route.
        if ((attained & ~bound) != 0 && report.gcan_containment) {
            report.gcan_containment = false;
            if (!report.condition1_witness) report.condition1_witness = h;
        }

        // Condition (1) asks for a G that also satisfies the caution condition;
        // G_can is pointwise minimal, so a non-surjective v-block whose G_can
        // value is all of B leaves no admissible bound at all.
        if (report.condition1 && d_values != full && bound == full) {
            report.condition1 = false;
            if (!report.condition1_witness) report.condition1_witness = h;
        }

        if (report.condition3 && !std::binary_search(unary_rows.begin(), unary_rows.end(), d)) {
            report.condition3 = false;
            report.condition3_witness = h;
        }
    }
    return report;
}

}  // namespace scsp
