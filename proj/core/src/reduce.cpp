#include "scsp/reduce.hpp"

#include <charconv>
#include <stdexcept>
#include <string>

#include "scsp/gadget.hpp"
#include "scsp/text_io.hpp"

namespace scsp {

namespace {

// b for symbols of the form C_<b>, -1 otherwise.
int constant_element(const std::string& symbol) {
    if (symbol.size() < 3 || symbol[0] != 'C' || symbol[1] != '_') return -1;
    int value = -1;
    const char* first = symbol.data() + 2;
    const char* last = symbol.data() + symbol.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) return -1;
    return value;
}

std::string padded(int value, int width) {
    std::string num = std::to_string(value);
    if (static_cast<int>(num.size()) >= width) return num;
    return std::string(static_cast<std::size_t>(width) - num.size(), '0') + num;
}

}  // namespace

ReduceResult reduce(const Structure& s, const CspInstance& phi,
                    const std::optional<CautionVerdict>& caution, std::int64_t cap) {
    const int n = s.universe_size;
    if (n < 2)
        throw std::invalid_argument(
            "universe has size 1: decide the SCSP instance directly instead of reducing");

    for (const auto& v : phi.vars)
        if (v.name.starts_with(kReservedPrefix))
            throw std::invalid_argument("variable '" + v.name + "' uses the reserved prefix " +
                                        kReservedPrefix);

    Gadget g = build_gadget(s, cap);

    ReduceResult out;
    out.structure_fingerprint = g.structure_fingerprint;
    out.gadget_m = g.m;
    if (caution)
        out.premise = caution->cautious ? PremiseStatus::Verified : PremiseStatus::NotCautious;

    std::vector<Variable> v_block;
    for (int j = 1; j <= n; ++j) v_block.push_back(Variable{std::string(kReservedPrefix) + "v" + std::to_string(j)});

    QfppFormula combined;
    std::set<Variable>& all_vars = combined.vars;
    for (const auto& u : phi.vars) all_vars.insert(u);
    for (const auto& v : v_block) all_vars.insert(v);

    // phi with each constant atom C_b(u) turned into the equality u = v_{b+1}.
    for (const auto& atom : phi.atoms) {
        int b = constant_element(atom.symbol);
        if (b >= 0 && s.signature.index_of(atom.symbol) < 0) {
            if (b >= n)
                throw std::invalid_argument("constant atom " + atom.symbol + ": element " +
                                            std::to_string(b) + " outside 0.." + std::to_string(n - 1));
            if (atom.args.size() != 1)
                throw std::invalid_argument("constant atom " + atom.symbol + " must be unary");
            combined.equalities.push_back({atom.args[0], v_block[static_cast<std::size_t>(b)]});
            continue;
        }
        if (s.signature.index_of(atom.symbol) < 0)
            throw std::invalid_argument("unknown relation symbol '" + atom.symbol + "'");
        combined.atoms.push_back(atom);
    }

    // One gadget copy per input variable, sharing the v-block, the variable
    // itself in the x role, and a fresh y-block.
    int width = static_cast<int>(std::to_string(g.m).size());
    for (const auto& u : phi.vars) {
        std::map<Variable, Variable> renaming;
        for (int j = 0; j < n; ++j) renaming[g.v_vars[static_cast<std::size_t>(j)]] = v_block[static_cast<std::size_t>(j)];
        renaming[g.x_var] = u;
        for (int j = 1; j <= g.m; ++j) {
            Variable fresh{std::string(kReservedPrefix) + "y_" + u.name + "_" + padded(j, width)};
            renaming[g.y_vars[static_cast<std::size_t>(j - 1)]] = fresh;
            all_vars.insert(fresh);
        }
        for (const auto& atom : g.formula.atoms) {
            Atom copy{atom.symbol, {}};
            copy.args.reserve(atom.args.size());
            for (const auto& arg : atom.args) copy.args.push_back(renaming.at(arg));
            combined.atoms.push_back(std::move(copy));
        }
    }

    out.vars_before_elimination = static_cast<int>(all_vars.size());

    EliminationResult eliminated = eliminate_equalities(all_vars, combined);
    out.merges = eliminated.merges;
    out.instance.vars = std::move(eliminated.vars);
    out.instance.atoms = std::move(eliminated.formula.atoms);
    return out;
}

}  // namespace scsp
