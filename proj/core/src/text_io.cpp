#include "scsp/text_io.hpp"

#include <charconv>
#include <sstream>

#include "scsp/tuples.hpp"

namespace scsp {

namespace {

struct Line {
    int number = 0;
    std::vector<std::string> tokens;
};

// Strips '#' comments, splits on whitespace, drops blank lines.
std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> lines;
    int number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view raw = text.substr(start, end - start);
        ++number;
        start = end + 1;

        if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
        Line line{number, {}};
        std::size_t i = 0;
        while (i < raw.size()) {
            while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
            std::size_t j = i;
            while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j]))) ++j;
            if (j > i) line.tokens.emplace_back(raw.substr(i, j - i));
            i = j;
        }
        if (!line.tokens.empty()) lines.push_back(std::move(line));
        if (end == text.size()) break;
    }
    return lines;
}

int parse_int(const std::string& token, int line) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        throw ParseError(line, "expected an integer, got '" + token + "'");
    return value;
}

}  // namespace

Structure parse_structure(std::string_view text) {
    auto lines = tokenize(text);
    if (lines.empty()) throw ParseError(1, "missing 'domain' directive");

    std::size_t pos = 0;
    if (lines[pos].tokens[0] != "domain" || lines[pos].tokens.size() != 2)
        throw ParseError(lines[pos].number, "expected 'domain <n>'");
    int n = parse_int(lines[pos].tokens[1], lines[pos].number);
    if (n < 1) throw ParseError(lines[pos].number, "domain size must be positive");
    ++pos;

    Structure s(n);
    while (pos < lines.size()) {
        const Line& head = lines[pos];
        if (head.tokens[0] != "relation")
            throw ParseError(head.number, "unknown directive '" + head.tokens[0] + "'");
        if (head.tokens.size() != 3)
            throw ParseError(head.number, "expected 'relation <name> <arity>'");
        std::string name = head.tokens[1];
        int arity = parse_int(head.tokens[2], head.number);
        if (arity < 1) throw ParseError(head.number, "arity must be >= 1");
        ++pos;

        std::vector<std::vector<int>> tuples;
        bool closed = false;
        while (pos < lines.size()) {
            const Line& line = lines[pos];
            if (line.tokens[0] == "end") {
                if (line.tokens.size() != 1) throw ParseError(line.number, "'end' takes no arguments");
                closed = true;
                ++pos;
                break;
            }
            std::vector<int> tuple;
            for (const auto& tok : line.tokens) tuple.push_back(parse_int(tok, line.number));
            if (static_cast<int>(tuple.size()) != arity)
                throw ParseError(line.number, "tuple has " + std::to_string(tuple.size()) +
                                                  " entries, relation '" + name + "' has arity " +
                                                  std::to_string(arity));
            for (int entry : tuple)
                if (entry < 0 || entry >= n)
                    throw ParseError(line.number,
                                     "entry " + std::to_string(entry) + " outside 0.." + std::to_string(n - 1));
            tuples.push_back(std::move(tuple));
            ++pos;
        }
        if (!closed) throw ParseError(lines.back().number, "relation '" + name + "' not terminated by 'end'");
        s.add_relation(std::move(name), arity, std::move(tuples));
    }
    return s;
}

std::string serialize_structure(const Structure& s) {
    std::ostringstream out;
    out << "domain " << s.universe_size << "\n";
    for (std::size_t r = 0; r < s.signature.symbols.size(); ++r) {
        const auto& sym = s.signature.symbols[r];
        out << "relation " << sym.name << " " << sym.arity << "\n";
        for (const auto& tuple : s.relations[r]) {
            for (std::size_t j = 0; j < tuple.size(); ++j) out << (j ? " " : "") << tuple[j];
            out << "\n";
        }
        out << "end\n";
    }
    return out.str();
}

QfppFormula parse_formula(std::string_view text) {
    QfppFormula phi;
    auto lines = tokenize(text);

    auto known = [&phi](const std::string& name, int line) {
        Variable v{name};
        if (!phi.vars.contains(v))
            throw ParseError(line, "variable '" + name + "' not declared in a vars line");
        return v;
    };

    for (const Line& line : lines) {
        const std::string& directive = line.tokens[0];
        if (directive == "vars") {
            if (line.tokens.size() < 2) throw ParseError(line.number, "'vars' needs at least one name");
            for (std::size_t i = 1; i < line.tokens.size(); ++i) phi.vars.insert(Variable{line.tokens[i]});
        } else if (directive == "atom") {
            if (line.tokens.size() < 3)
                throw ParseError(line.number, "expected 'atom <relname> <var> ...'");
            Atom atom{line.tokens[1], {}};
            for (std::size_t i = 2; i < line.tokens.size(); ++i)
                atom.args.push_back(known(line.tokens[i], line.number));
            phi.atoms.push_back(std::move(atom));
        } else if (directive == "eq") {
            if (line.tokens.size() != 3) throw ParseError(line.number, "expected 'eq <var> <var>'");
            phi.equalities.push_back({known(line.tokens[1], line.number), known(line.tokens[2], line.number)});
        } else if (directive == "const") {
            if (line.tokens.size() != 3) throw ParseError(line.number, "expected 'const <element> <var>'");
            int element = parse_int(line.tokens[1], line.number);
            if (element < 0) throw ParseError(line.number, "constant element must be non-negative");
            phi.atoms.push_back({constant_symbol_name(element), {known(line.tokens[2], line.number)}});
        } else {
            throw ParseError(line.number, "unknown directive '" + directive + "'");
        }
    }
    return phi;
}

namespace {

std::pair<std::set<Variable>, std::vector<Atom>> parse_atoms_only(std::string_view text) {
    QfppFormula phi = parse_formula(text);
    if (!phi.equalities.empty())
        throw ParseError(1, "'eq' lines are not allowed in an atoms-only instance");
    return {std::move(phi.vars), std::move(phi.atoms)};
}

void write_vars(std::ostringstream& out, const std::set<Variable>& vars) {
    std::size_t i = 0;
    for (const auto& v : vars) {
        if (i % 8 == 0) out << (i ? "\nvars" : "vars");
        out << " " << v.name;
        ++i;
    }
    if (i) out << "\n";
}

void write_atoms(std::ostringstream& out, const std::vector<Atom>& atoms) {
    for (const auto& atom : atoms) {
        out << "atom " << atom.symbol;
        for (const auto& v : atom.args) out << " " << v.name;
        out << "\n";
    }
}

}  // namespace

CspInstance parse_csp_instance(std::string_view text) {
    auto [vars, atoms] = parse_atoms_only(text);
    return {std::move(vars), std::move(atoms)};
}

ScspInstance parse_scsp_instance(std::string_view text) {
    auto [vars, atoms] = parse_atoms_only(text);
    return {std::move(vars), std::move(atoms)};
}

std::string serialize_formula(const QfppFormula& phi) {
    std::ostringstream out;
    write_vars(out, phi.vars);
    write_atoms(out, phi.atoms);
    for (const auto& eq : phi.equalities)
        out << "eq " << eq.left.name << " " << eq.right.name << "\n";
    return out.str();
}

std::string serialize_instance(const CspInstance& inst) { return serialize_formula(to_formula(inst)); }
std::string serialize_instance(const ScspInstance& inst) { return serialize_formula(to_formula(inst)); }

std::vector<OperationTable> parse_operation_tables(std::string_view text, int universe_size) {
    auto lines = tokenize(text);
    std::vector<OperationTable> tables;
    std::size_t pos = 0;
    while (pos < lines.size()) {
        const Line& head = lines[pos];
        if (head.tokens[0] != "op")
            throw ParseError(head.number, "unknown directive '" + head.tokens[0] + "'");
        if (head.tokens.size() != 2) throw ParseError(head.number, "expected 'op <arity>'");
        int arity = parse_int(head.tokens[1], head.number);
        if (arity < 1) throw ParseError(head.number, "arity must be >= 1");
        ++pos;

        OperationTable f{universe_size, arity, {}};
        std::int64_t expected = ipow(universe_size, arity);
        bool closed = false;
        while (pos < lines.size()) {
            const Line& line = lines[pos];
            if (line.tokens[0] == "end") {
                closed = true;
                ++pos;
                break;
            }
            for (const auto& tok : line.tokens) {
                int value = parse_int(tok, line.number);
                if (value < 0 || value >= universe_size)
                    throw ParseError(line.number, "value " + std::to_string(value) + " outside 0.." +
                                                      std::to_string(universe_size - 1));
                f.values.push_back(value);
            }
            ++pos;
        }
        if (!closed) throw ParseError(lines.back().number, "op block not terminated by 'end'");
        if (static_cast<std::int64_t>(f.values.size()) != expected)
            throw ParseError(head.number, "op block has " + std::to_string(f.values.size()) +
                                              " values, expected " + std::to_string(expected));
        tables.push_back(std::move(f));
    }
    return tables;
}

std::string serialize_operation_table(const OperationTable& f) {
    std::ostringstream out;
    out << "op " << f.arity << "\n";
    for (std::size_t i = 0; i < f.values.size(); ++i) out << (i ? " " : "") << f.values[i];
    if (!f.values.empty()) out << "\n";
    out << "end\n";
    return out.str();
}

std::uint64_t fnv1a(std::string_view bytes) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[v & 0xf];
        v >>= 4;
    }
    return out;
}

std::uint64_t fingerprint(const Structure& s) { return fnv1a(serialize_structure(s)); }
std::uint64_t digest(const QfppFormula& phi) { return fnv1a(serialize_formula(phi)); }

}  // namespace scsp
