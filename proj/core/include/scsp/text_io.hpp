#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "scsp/errors.hpp"
#include "scsp/formula.hpp"
#include "scsp/operation.hpp"
#include "scsp/structure.hpp"

namespace scsp {

// Structure files are line-oriented UTF-8 with '#' comments:
//   domain <n>
//   relation <name> <arity>
//   <tuple entries, space separated, one tuple per line>
//   end
//
// Formula / instance files:
//   vars <name> <name> ...     (repeatable; union is taken)
//   atom <relname> <var> ...
//   eq <var> <var>
//   const <element> <var>      (sugar for atom C_<element>(var))
//
// Operation table files hold one or more blocks:
//   op <arity>
//   <n^arity values in lexicographic input order>
//   end

Structure parse_structure(std::string_view text);
std::string serialize_structure(const Structure& s);

/// Accepts vars/atom/eq/const directives; const expands to a C_b atom.
QfppFormula parse_formula(std::string_view text);

/// As parse_formula but rejects eq lines (conjunction of atoms only).
CspInstance parse_csp_instance(std::string_view text);
ScspInstance parse_scsp_instance(std::string_view text);

/// Emits vars lines, then atoms, then equalities. Deterministic.
std::string serialize_formula(const QfppFormula& phi);
std::string serialize_instance(const CspInstance& inst);
std::string serialize_instance(const ScspInstance& inst);

std::vector<OperationTable> parse_operation_tables(std::string_view text, int universe_size);
std::string serialize_operation_table(const OperationTable& f);

/// FNV-1a digest of the canonical serialization, as 16 hex digits.
std::uint64_t fnv1a(std::string_view bytes);
std::string hex64(std::uint64_t v);
std::uint64_t fingerprint(const Structure& s);
std::uint64_t digest(const QfppFormula& phi);

}  // namespace scsp
