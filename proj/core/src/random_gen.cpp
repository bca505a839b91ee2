#include "scsp/random_gen.hpp"

#include <stdexcept>

#include "scsp/tuples.hpp"

namespace scsp {

Structure random_structure(std::uint64_t seed, int n, const SignatureShape& shape) {
    if (n < 1) throw std::invalid_argument("universe size must be positive");
    Rng rng(seed);
    Structure s(n);
    for (const auto& [name, arity] : shape) {
        if (arity < 1) throw std::invalid_argument("arity must be >= 1");
        std::vector<std::vector<int>> tuples;
        std::vector<int> t(static_cast<std::size_t>(arity), 0);
        do {
            if (rng.chance(0.5)) tuples.push_back(t);
        } while (next_tuple(t, n));
        s.add_relation(name, arity, std::move(tuples));
    }
    return s;
}

CspInstance random_instance(std::uint64_t seed, const Structure& base, bool with_constants,
                            int max_vars, int max_atoms, double const_prob) {
    if (max_vars < 1) throw std::invalid_argument("max_vars must be positive");
    if (max_atoms < 0) throw std::invalid_argument("max_atoms must be non-negative");

    Rng rng(seed);
    CspInstance inst;
    int var_count = 1 + rng.below(max_vars);
    std::vector<Variable> vars;
    for (int i = 1; i <= var_count; ++i) {
        vars.push_back(Variable{"u" + std::to_string(i)});
        inst.vars.insert(vars.back());
    }

    const auto& symbols = base.signature.symbols;
    int atom_count = max_atoms > 0 ? rng.below(max_atoms + 1) : 0;
    for (int i = 0; i < atom_count; ++i) {
        if (with_constants && (symbols.empty() || rng.chance(const_prob))) {
            int b = rng.below(base.universe_size);
            inst.atoms.push_back({constant_symbol_name(b), {vars[static_cast<std::size_t>(rng.below(var_count))]}});
            continue;
        }
        if (symbols.empty()) break;
        const auto& sym = symbols[static_cast<std::size_t>(rng.below(static_cast<int>(symbols.size())))];
        Atom atom{sym.name, {}};
        for (int j = 0; j < sym.arity; ++j)
            atom.args.push_back(vars[static_cast<std::size_t>(rng.below(var_count))]);
        inst.atoms.push_back(std::move(atom));
    }
    return inst;
}

}  // namespace scsp
