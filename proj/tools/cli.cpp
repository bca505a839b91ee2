#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "scsp/caution.hpp"
#include "scsp/errors.hpp"
#include "scsp/gadget.hpp"
#include "scsp/poly_search.hpp"
#include "scsp/reduce.hpp"
#include "scsp/solver.hpp"
#include "scsp/text_io.hpp"
#include "scsp/tuples.hpp"
#include "scsp/verify.hpp"

namespace scsp::cli {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot read '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write '" + path + "'");
    out << content;
}

Structure load_structure(const std::string& path) {
    Structure s = parse_structure(read_file(path));
    auto diagnostics = validate_structure(s);
    if (!diagnostics.empty()) {
        std::string message = "'" + path + "' is not a valid structure:";
        for (const auto& d : diagnostics) message += "\n  " + d;
        throw std::invalid_argument(message);
    }
    return s;
}

std::string format_tuple(const std::vector<int>& t) {
    std::string out = "(";
    for (std::size_t i = 0; i < t.size(); ++i) out += (i ? "," : "") + std::to_string(t[i]);
    return out + ")";
}

std::string format_assignment(const Assignment& a) {
    std::string out;
    for (const auto& [var, value] : a) {
        if (!out.empty()) out += " ";
        out += var.name + "=" + std::to_string(value);
    }
    return out;
}

struct Options {
    std::string structure_path;
    std::string instance_path;
    std::string table_path;
    std::string output_path;
    std::string report_path;
    std::int64_t cap = kDefaultPowerCap;
    std::uint64_t budget = kDefaultNodeBudget;
    std::uint64_t seed = 1;
    int trials = 50;
    int max_vars = 4;
    int max_atoms = 5;
    std::uint64_t solution_cap = 1000000;
    bool verify_flag = false;
};

int cmd_validate(const Options& o, std::ostream& out) {
    Structure s = parse_structure(read_file(o.structure_path));
    auto diagnostics = validate_structure(s);
    if (diagnostics.empty()) {
        out << "ok\n";
    } else {
        for (const auto& d : diagnostics) out << d << "\n";
    }
    return 0;
}

int cmd_poly_check(const Options& o, std::ostream& out, std::ostream& err) {
    Structure s = load_structure(o.structure_path);
    auto tables = parse_operation_tables(read_file(o.table_path), s.universe_size);
    if (tables.empty()) throw std::invalid_argument("'" + o.table_path + "' holds no op block");
    for (const auto& f : tables) {
        auto violations = polymorphism_violations(s, f);
        out << (violations.empty() ? "yes" : "no") << "\n";
        for (const auto& v : violations) {
            err << "violation " << v.symbol << ":";
            for (const auto& source : v.sources) err << " " << format_tuple(source);
            err << " -> " << format_tuple(v.result) << "\n";
        }
    }
    return 0;
}

int cmd_unary(const Options& o, std::ostream& out, std::ostream& err) {
    Structure s = load_structure(o.structure_path);
    auto monoid = unary_polymorphisms(s);
    std::string text;
    for (const auto& u : monoid) text += serialize_operation_table(u);
    err << monoid.size() << " unary polymorphisms\n";
    if (!o.output_path.empty())
        write_file(o.output_path, text);
    else
        out << text;
    return 0;
}

int cmd_gmap(const Options& o, std::ostream& out) {
    Structure s = load_structure(o.structure_path);
    std::string text = serialize_gmap(canonical_g(s, o.cap));
    if (!o.output_path.empty())
        write_file(o.output_path, text);
    else
        out << text;
    return 0;
}

int cmd_cautious(const Options& o, std::ostream& out) {
    Structure s = load_structure(o.structure_path);
    CautionVerdict verdict = is_diagonal_cautious(s, o.cap);
    out << (verdict.cautious ? "yes" : "no") << "\n";
    if (verdict.witness) out << "witness " << format_tuple(*verdict.witness) << "\n";
    return 0;
}

int cmd_gadget(const Options& o, std::ostream& out) {
    Structure s = load_structure(o.structure_path);
    Gadget g = build_gadget(s, o.cap);
    out << "n " << g.n << "\n";
    out << "m " << g.m << "\n";
    out << "vars " << g.formula.vars.size() << "\n";
    out << "atoms " << g.formula.atoms.size() << "\n";
    if (!o.output_path.empty()) write_file(o.output_path, serialize_formula(g.formula));
    if (o.verify_flag) {
        GadgetReport report = verify_gadget(s, g, o.solution_cap, o.cap);
        out << "condition1 " << (report.condition1 ? "pass" : "fail") << "\n";
        out << "condition2 " << (report.condition2 ? "pass" : "fail") << "\n";
        out << "condition3 " << (report.condition3 ? "pass" : "fail") << "\n";
        out << "gcan-containment " << (report.gcan_containment ? "pass" : "fail") << "\n";
        out << "solutions " << report.solution_count << (report.complete ? " exact" : " truncated")
            << "\n";
        if (report.condition1_witness)
            out << "condition1-witness " << format_assignment(*report.condition1_witness) << "\n";
    }
    return 0;
}

const char* premise_name(PremiseStatus premise) {
    switch (premise) {
        case PremiseStatus::Verified: return "cautious";
        case PremiseStatus::NotCautious: return "not-cautious";
        case PremiseStatus::Unchecked: return "unchecked";
    }
    return "?";
}

int cmd_reduce(const Options& o, std::ostream& out, std::ostream& err) {
    Structure s = load_structure(o.structure_path);
    CspInstance phi = parse_csp_instance(read_file(o.instance_path));

    std::optional<CautionVerdict> caution;
    if (ipow(s.universe_size, s.universe_size) <= o.cap)
        caution = is_diagonal_cautious(s, o.cap);
    else
        err << "caution verdict skipped: universe exceeds the cap\n";

    ReduceResult r = reduce(s, phi, caution, o.cap);
    write_file(o.output_path, serialize_instance(r.instance));
    out << "vars " << r.instance.vars.size() << "\n";
    out << "atoms " << r.instance.atoms.size() << "\n";
    if (r.premise != PremiseStatus::Verified)
        err << "premise " << premise_name(r.premise) << ": the instance is emitted without the equivalence guarantee\n";

    if (!o.report_path.empty()) {
        std::ostringstream report;
        report << "reduce-report\n";
        report << "structure " << hex64(r.structure_fingerprint) << "\n";
        report << "premise " << premise_name(r.premise) << "\n";
        report << "gadget-m " << r.gadget_m << "\n";
        report << "input-vars " << phi.vars.size() << "\n";
        report << "input-atoms " << phi.atoms.size() << "\n";
        report << "prelim-vars " << r.vars_before_elimination << "\n";
        report << "merges " << r.merges << "\n";
        report << "output-vars " << r.instance.vars.size() << "\n";
        report << "output-atoms " << r.instance.atoms.size() << "\n";
        write_file(o.report_path, report.str());
    }
    return 0;
}

int cmd_solve(const Options& o, bool surjective, std::ostream& out) {
    Structure s = load_structure(o.structure_path);
    QfppFormula phi = parse_formula(read_file(o.instance_path));
    SolveResult r = surjective ? solve_scsp(s, phi.vars, phi, o.budget) : solve_csp(s, phi, o.budget);
    out << verdict_name(r.verdict) << "\n";
    if (r.witness) out << "witness " << format_assignment(*r.witness) << "\n";
    return 0;
}

int cmd_verify(const Options& o, std::ostream& out) {
    Structure s = load_structure(o.structure_path);
    VerifyOptions options;
    options.trials = o.trials;
    options.seed = o.seed;
    options.max_vars = o.max_vars;
    options.max_atoms = o.max_atoms;
    options.budget = o.budget;
    options.cap = o.cap;
    VerificationReport report = verify_reduction(s, options);
    std::string text = serialize_verification_report(report);
    out << text;
    if (!o.report_path.empty()) write_file(o.report_path, text);
    return 0;
}

int cmd_corpus(const Options& o, std::ostream& out) {
    CorpusOptions options;
    options.trials = o.trials;
    options.seed = o.seed;
    options.max_vars = o.max_vars;
    options.max_atoms = o.max_atoms;
    options.budget = o.budget;
    CorpusReport report = run_boolean_corpus(options);
    out << "structures " << report.rows.size() << " cautious " << report.cautious_count
        << " gmap-mismatches " << report.gmap_mismatches << " disagreements "
        << report.disagreements << " budget-exhaustions " << report.budget_exhaustions << "\n";
    out << (report.passed() ? "pass" : "fail") << "\n";
    if (!o.report_path.empty()) write_file(o.report_path, serialize_corpus_report(report));
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"surjective constraint satisfaction toolkit"};
    app.require_subcommand(1);
    Options o;

    auto add_cap = [&o](CLI::App* cmd) { cmd->add_option("--cap", o.cap, "max power universe cells"); };
    auto add_budget = [&o](CLI::App* cmd) { cmd->add_option("--budget", o.budget, "solver node budget"); };
    auto add_trial_options = [&o](CLI::App* cmd) {
        cmd->add_option("--trials", o.trials, "number of random trials");
        cmd->add_option("--seed", o.seed, "base seed");
        cmd->add_option("--max-vars", o.max_vars, "max variables per random instance");
        cmd->add_option("--max-atoms", o.max_atoms, "max atoms per random instance");
        cmd->add_option("--report", o.report_path, "write the full report to this path");
    };

    CLI::App* validate = app.add_subcommand("validate", "structure diagnostics");
    validate->add_option("structure", o.structure_path)->required();

    CLI::App* poly_check = app.add_subcommand("poly-check", "check operation tables for the polymorphism property");
    poly_check->add_option("structure", o.structure_path)->required();
    poly_check->add_option("tables", o.table_path)->required();

    CLI::App* unary = app.add_subcommand("unary", "the unary polymorphism monoid");
    unary->add_option("structure", o.structure_path)->required();
    unary->add_option("-o,--output", o.output_path, "write op blocks here instead of stdout");

    CLI::App* gmap = app.add_subcommand("gmap", "dump the canonical G map");
    gmap->add_option("structure", o.structure_path)->required();
    gmap->add_option("-o,--output", o.output_path);
    add_cap(gmap);

    CLI::App* cautious = app.add_subcommand("cautious", "decide diagonal-cautiousness");
    cautious->add_option("structure", o.structure_path)->required();
    add_cap(cautious);

    CLI::App* gadget = app.add_subcommand("gadget", "build (and optionally verify) the gadget formula");
    gadget->add_option("structure", o.structure_path)->required();
    gadget->add_option("-o,--output", o.output_path, "write the formula here");
    gadget->add_flag("--verify", o.verify_flag, "check the gadget conditions");
    gadget->add_option("--solutions", o.solution_cap, "solution enumeration cap for --verify");
    add_cap(gadget);

    CLI::App* reduce_cmd = app.add_subcommand("reduce", "reduce a constants-expansion instance to an SCSP instance");
    reduce_cmd->add_option("structure", o.structure_path)->required();
    reduce_cmd->add_option("instance", o.instance_path)->required();
    reduce_cmd->add_option("-o,--output", o.output_path)->required();
    reduce_cmd->add_option("--report", o.report_path, "write a sidecar report");
    add_cap(reduce_cmd);

    CLI::App* solve_csp_cmd = app.add_subcommand("solve-csp", "decide satisfiability");
    solve_csp_cmd->add_option("structure", o.structure_path)->required();
    solve_csp_cmd->add_option("instance", o.instance_path)->required();
    add_budget(solve_csp_cmd);

    CLI::App* solve_scsp_cmd = app.add_subcommand("solve-scsp", "decide surjective satisfiability");
    solve_scsp_cmd->add_option("structure", o.structure_path)->required();
    solve_scsp_cmd->add_option("instance", o.instance_path)->required();
    add_budget(solve_scsp_cmd);

    CLI::App* verify = app.add_subcommand("verify", "random end-to-end reduction trials");
    verify->add_option("structure", o.structure_path)->required();
    add_trial_options(verify);
    add_budget(verify);
    add_cap(verify);

    CLI::App* corpus = app.add_subcommand("corpus", "run the full Boolean corpus");
    add_trial_options(corpus);
    add_budget(corpus);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (app.got_subcommand(validate)) return cmd_validate(o, out);
        if (app.got_subcommand(poly_check)) return cmd_poly_check(o, out, err);
        if (app.got_subcommand(unary)) return cmd_unary(o, out, err);
        if (app.got_subcommand(gmap)) return cmd_gmap(o, out);
        if (app.got_subcommand(cautious)) return cmd_cautious(o, out);
        if (app.got_subcommand(gadget)) return cmd_gadget(o, out);
        if (app.got_subcommand(reduce_cmd)) return cmd_reduce(o, out, err);
        if (app.got_subcommand(solve_csp_cmd)) return cmd_solve(o, false, out);
        if (app.got_subcommand(solve_scsp_cmd)) return cmd_solve(o, true, out);
        if (app.got_subcommand(verify)) return cmd_verify(o, out);
        if (app.got_subcommand(corpus)) return cmd_corpus(o, out);
    } catch (const CapError& e) {
        err << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return 2;
    }
    err << "no subcommand\n";
    return 2;
}

}  // namespace scsp::cli
