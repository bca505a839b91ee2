#include "scsp/solver.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <stdexcept>

namespace scsp {

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Yes: return "yes";
        case Verdict::No: return "no";
        case Verdict::BudgetExceeded: return "budget-exceeded";
    }
    return "?";
}

namespace {

struct Constraint {
    const std::vector<std::vector<int>>* table = nullptr;  // nullptr for an equality
    std::vector<int> args;                                 // variable indices
};

// Backtracking over the formula variables in lexicographic name order with
// ascending values. Every assignment forward-prunes the domains of the other
// variables of each touched constraint.
struct Engine {
    int n = 0;
    std::vector<Variable> vars;
    std::vector<Constraint> constraints;
    std::vector<std::vector<int>> watching;
    std::vector<std::uint32_t> domain;
    std::vector<int> chosen;
    std::vector<std::pair<int, std::uint32_t>> trail;

    bool surjective = false;
    std::vector<int> used_count;
    int distinct_used = 0;

    std::uint64_t budget = 0;  // 0 = unlimited
    std::uint64_t nodes = 0;
    bool budget_hit = false;

    std::uint64_t max_solutions = 1;
    std::vector<Assignment>* sink = nullptr;  // nullptr: keep only the first solution
    std::uint64_t found = 0;
    std::optional<Assignment> first;

    Engine(const Structure& s, const QfppFormula& phi) : n(s.universe_size) {
        vars.assign(phi.vars.begin(), phi.vars.end());
        std::map<Variable, int> index;
        for (std::size_t i = 0; i < vars.size(); ++i) index[vars[i]] = static_cast<int>(i);
        auto index_of = [&index](const Variable& v) {
            auto it = index.find(v);
            if (it == index.end())
                throw std::invalid_argument("variable '" + v.name + "' not in the variable set");
            return it->second;
        };

        domain.assign(vars.size(), (std::uint32_t{1} << n) - 1);
        chosen.assign(vars.size(), -1);
        watching.resize(vars.size());

        for (const auto& atom : phi.atoms) {
            int sym = s.signature.index_of(atom.symbol);
            if (sym < 0) throw std::invalid_argument("unknown relation symbol '" + atom.symbol + "'");
            if (static_cast<int>(atom.args.size()) != s.signature.symbols[static_cast<std::size_t>(sym)].arity)
                throw std::invalid_argument("atom '" + atom.symbol + "' has wrong arity");
            Constraint c{&s.relations[static_cast<std::size_t>(sym)], {}};
            for (const auto& v : atom.args) c.args.push_back(index_of(v));
            add(std::move(c));
        }
        for (const auto& eq : phi.equalities)
            add(Constraint{nullptr, {index_of(eq.left), index_of(eq.right)}});
    }

    void add(Constraint c) {
        int ci = static_cast<int>(constraints.size());
        for (int arg : c.args) {
            auto& w = watching[static_cast<std::size_t>(arg)];
            if (w.empty() || w.back() != ci) w.push_back(ci);
        }
        constraints.push_back(std::move(c));
    }

    bool prune(int var, std::uint32_t keep) {
        std::uint32_t next = domain[static_cast<std::size_t>(var)] & keep;
        if (next == domain[static_cast<std::size_t>(var)]) return next != 0;
        trail.emplace_back(var, domain[static_cast<std::size_t>(var)]);
        domain[static_cast<std::size_t>(var)] = next;
        return next != 0;
    }

    bool revise(const Constraint& c) {
        if (!c.table) {
            std::uint32_t both =
                domain[static_cast<std::size_t>(c.args[0])] & domain[static_cast<std::size_t>(c.args[1])];
            return prune(c.args[0], both) && prune(c.args[1], both);
        }
        std::vector<std::uint32_t> support(c.args.size(), 0);
        for (const auto& tuple : *c.table) {
            bool consistent = true;
            for (std::size_t j = 0; j < c.args.size(); ++j)
                if (!(domain[static_cast<std::size_t>(c.args[j])] & (std::uint32_t{1} << tuple[j]))) {
                    consistent = false;
                    break;
                }
            if (!consistent) continue;
            for (std::size_t j = 0; j < c.args.size(); ++j)
                support[j] |= std::uint32_t{1} << tuple[j];
        }
        for (std::size_t j = 0; j < c.args.size(); ++j)
            if (!prune(c.args[j], support[j])) return false;
        return true;
    }

    bool initial_propagation() {
        for (const auto& c : constraints)
            if (!revise(c)) return false;
        return true;
    }

    // Returns true to stop the whole search.
    bool dfs(int depth) {
        if (depth == static_cast<int>(vars.size())) {
            if (surjective && distinct_used != n) return false;
            ++found;
            Assignment a;
            for (std::size_t i = 0; i < vars.size(); ++i) a[vars[i]] = chosen[i];
            if (sink) {
                sink->push_back(std::move(a));
                return found >= max_solutions;
            }
            first = std::move(a);
            return true;
        }

        std::uint32_t candidates = domain[static_cast<std::size_t>(depth)];
        int remaining_after = static_cast<int>(vars.size()) - depth - 1;
        for (int v = 0; v < n; ++v) {
            if (!(candidates & (std::uint32_t{1} << v))) continue;
            if (budget && ++nodes > budget) {
                budget_hit = true;
                return true;
            }
            if (!budget) ++nodes;

            if (surjective) {
                if (used_count[static_cast<std::size_t>(v)]++ == 0) ++distinct_used;
                if (distinct_used + remaining_after < n) {
                    if (--used_count[static_cast<std::size_t>(v)] == 0) --distinct_used;
                    continue;
                }
            }

            std::size_t mark = trail.size();
            trail.emplace_back(depth, domain[static_cast<std::size_t>(depth)]);
            domain[static_cast<std::size_t>(depth)] = std::uint32_t{1} << v;
            chosen[static_cast<std::size_t>(depth)] = v;

            bool ok = true;
            for (int ci : watching[static_cast<std::size_t>(depth)])
                if (!revise(constraints[static_cast<std::size_t>(ci)])) {
                    ok = false;
                    break;
                }
            if (ok && dfs(depth + 1)) return true;

            chosen[static_cast<std::size_t>(depth)] = -1;
            while (trail.size() > mark) {
                auto [var, mask] = trail.back();
                trail.pop_back();
                domain[static_cast<std::size_t>(var)] = mask;
            }
            if (surjective) {
                if (--used_count[static_cast<std::size_t>(v)] == 0) --distinct_used;
            }
        }
        return false;
    }

    void run() {
        if (surjective) used_count.assign(static_cast<std::size_t>(n), 0);
        if (!initial_propagation()) return;
        dfs(0);
    }
};

SolveResult solve(const Structure& s, const QfppFormula& phi, bool surjective, std::uint64_t budget) {
    auto start = std::chrono::steady_clock::now();
    Engine engine(s, phi);
    engine.surjective = surjective;
    engine.budget = budget;
    engine.run();

    SolveResult result;
    result.stats.nodes = engine.nodes;
    result.stats.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (engine.budget_hit) {
        result.verdict = Verdict::BudgetExceeded;
        return result;
    }
    if (!engine.first) {
        result.verdict = Verdict::No;
        return result;
    }
    if (!evaluate(s, phi, *engine.first))
        throw std::logic_error("solver produced a non-satisfying witness");
    result.verdict = Verdict::Yes;
    result.witness = std::move(engine.first);
    return result;
}

}  // namespace

SolveResult solve_csp(const Structure& s, const CspInstance& inst, std::uint64_t budget) {
    return solve(s, to_formula(inst), false, budget);
}

SolveResult solve_csp(const Structure& s, const QfppFormula& phi, std::uint64_t budget) {
    return solve(s, phi, false, budget);
}

SolveResult solve_scsp(const Structure& s, const ScspInstance& inst, std::uint64_t budget) {
    return solve(s, to_formula(inst), true, budget);
}

SolveResult solve_scsp(const Structure& s, const std::set<Variable>& U, const QfppFormula& phi,
                       std::uint64_t budget) {
    QfppFormula widened = phi;
    for (const auto& v : phi.vars)
        if (!U.contains(v))
            throw std::invalid_argument("formula variable '" + v.name + "' not in U");
    widened.vars = U;
    return solve(s, widened, true, budget);
}

EnumerationResult enumerate_solutions(const Structure& s, const QfppFormula& phi,
                                      std::uint64_t max_solutions) {
    Engine engine(s, phi);
    EnumerationResult out;
    engine.sink = &out.solutions;
    engine.max_solutions = max_solutions;
    engine.run();
    out.nodes = engine.nodes;
    // Hitting the cap truncates; the count is then a lower bound.
    out.complete = engine.found < max_solutions;
    return out;
}

}  // namespace scsp
