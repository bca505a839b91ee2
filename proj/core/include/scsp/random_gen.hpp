#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "scsp/formula.hpp"
#include "scsp/structure.hpp"

namespace scsp {

/// mt19937_64 with hand-rolled draw helpers. The standard distributions are
/// implementation-defined, which would break byte-identical outputs across
/// toolchains; the engine itself is fully specified.
struct Rng {
    std::mt19937_64 engine;

    explicit Rng(std::uint64_t seed) : engine(seed) {}

    int below(int k) { return static_cast<int>(engine() % static_cast<std::uint64_t>(k)); }

    bool chance(double p) {
        return (static_cast<double>(engine() >> 11) * 0x1.0p-53) < p;
    }
};

using SignatureShape = std::vector<std::pair<std::string, int>>;  // (name, arity)

/// Deterministic-per-seed structure with the given signature shape; each
/// possible tuple is included with probability 1/2. Always validates clean.
Structure random_structure(std::uint64_t seed, int n, const SignatureShape& shape);

/// Deterministic-per-seed instance over base (or its expansion by constants
/// when with_constants): 1..max_vars variables u1..uk, 0..max_atoms atoms drawn
/// uniformly over symbols and variable tuples; each atom is a constant atom
/// with probability const_prob when constants are on.
CspInstance random_instance(std::uint64_t seed, const Structure& base, bool with_constants,
                            int max_vars, int max_atoms, double const_prob = 0.3);

}  // namespace scsp
