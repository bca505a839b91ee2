#include "scsp/formula.hpp"

#include <algorithm>
#include <stdexcept>

namespace scsp {

QfppFormula to_formula(const CspInstance& inst) { return {inst.vars, inst.atoms, {}}; }
QfppFormula to_formula(const ScspInstance& inst) { return {inst.vars, inst.atoms, {}}; }

namespace {

int value_of(const Assignment& a, const Variable& v) {
    auto it = a.find(v);
    if (it == a.end()) throw std::invalid_argument("assignment misses variable '" + v.name + "'");
    return it->second;
}

}  // namespace

bool evaluate(const Structure& s, const QfppFormula& phi, const Assignment& a) {
    for (const auto& eq : phi.equalities)
        if (value_of(a, eq.left) != value_of(a, eq.right)) return false;

    std::vector<int> point;
    for (const auto& atom : phi.atoms) {
        int idx = s.signature.index_of(atom.symbol);
        if (idx < 0) throw std::invalid_argument("unknown relation symbol '" + atom.symbol + "'");
        const auto& sym = s.signature.symbols[static_cast<std::size_t>(idx)];
        if (static_cast<int>(atom.args.size()) != sym.arity)
            throw std::invalid_argument("atom '" + atom.symbol + "' has wrong arity");

        point.clear();
        for (const auto& v : atom.args) point.push_back(value_of(a, v));
        const auto& table = s.relations[static_cast<std::size_t>(idx)];
        if (!std::binary_search(table.begin(), table.end(), point)) return false;
    }
    return true;
}

EliminationResult eliminate_equalities(const std::set<Variable>& W, const QfppFormula& phi) {
    for (const auto& v : phi.vars)
        if (!W.contains(v))
            throw std::invalid_argument("formula variable '" + v.name + "' not in W");

    // Union-find over W; each class is represented by its least name, so the
    // result does not depend on the order equalities are processed in.
    std::vector<Variable> names(W.begin(), W.end());
    std::map<Variable, int> index;
    for (std::size_t i = 0; i < names.size(); ++i) index[names[i]] = static_cast<int>(i);

    std::vector<int> parent(names.size());
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);

    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };

    int merges = 0;
    for (const auto& eq : phi.equalities) {
        auto li = index.find(eq.left);
        auto ri = index.find(eq.right);
        if (li == index.end() || ri == index.end())
            throw std::invalid_argument("equality uses a variable outside W");
        int a = find(li->second);
        int b = find(ri->second);
        if (a == b) continue;
        // names is sorted, so the smaller index is the smaller name.
        if (a > b) std::swap(a, b);
        parent[static_cast<std::size_t>(b)] = a;
        ++merges;
    }

    auto representative = [&](const Variable& v) {
        auto it = index.find(v);
        if (it == index.end())
            throw std::invalid_argument("atom variable '" + v.name + "' not in W");
        return names[static_cast<std::size_t>(find(it->second))];
    };

    EliminationResult out;
    out.merges = merges;
    for (std::size_t i = 0; i < names.size(); ++i)
        if (find(static_cast<int>(i)) == static_cast<int>(i)) out.vars.insert(names[i]);

    out.formula.vars = out.vars;
    for (const auto& atom : phi.atoms) {
        Atom rewritten{atom.symbol, {}};
        rewritten.args.reserve(atom.args.size());
        for (const auto& v : atom.args) rewritten.args.push_back(representative(v));
        out.formula.atoms.push_back(std::move(rewritten));
    }
    return out;
}

}  // namespace scsp
