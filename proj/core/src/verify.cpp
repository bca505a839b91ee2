#include "scsp/verify.hpp"

#include <sstream>
#include <stdexcept>

#include "scsp/errors.hpp"
#include "scsp/random_gen.hpp"
#include "scsp/reduce.hpp"
#include "scsp/text_io.hpp"
#include "scsp/tuples.hpp"

namespace scsp {

VerificationReport verify_reduction(const Structure& s, const VerifyOptions& options) {
    VerificationReport report;
    report.structure_fingerprint = fingerprint(s);

    CautionVerdict caution = is_diagonal_cautious(s, options.cap);
    report.premise_cautious = caution.cautious;

    Structure expanded = expand_with_constants(s);

    for (int t = 0; t < options.trials; ++t) {
        TrialRecord trial;
        trial.seed = options.seed + static_cast<std::uint64_t>(t);
        CspInstance instance =
            random_instance(trial.seed, s, true, options.max_vars, options.max_atoms);
        trial.instance_digest = hex64(digest(to_formula(instance)));

        SolveResult csp = solve_csp(expanded, instance, options.budget);
        ReduceResult reduced = reduce(s, instance, caution, options.cap);
        SolveResult scsp = solve_scsp(s, reduced.instance, options.budget);

        trial.csp = csp.verdict;
        trial.scsp = scsp.verdict;
        trial.budget_exhausted =
            csp.verdict == Verdict::BudgetExceeded || scsp.verdict == Verdict::BudgetExceeded;
        trial.agree = !trial.budget_exhausted && csp.verdict == scsp.verdict;

        if (trial.budget_exhausted)
            ++report.budget_count;
        else if (trial.agree)
            ++report.agree_count;
        else
            ++report.disagree_count;
        report.trials.push_back(std::move(trial));
    }
    return report;
}

std::string serialize_verification_report(const VerificationReport& report) {
    std::ostringstream out;
    out << "verify-report\n";
    out << "structure " << hex64(report.structure_fingerprint) << "\n";
    out << "premise-cautious " << (report.premise_cautious ? "yes" : "no") << "\n";
    out << "trials " << report.trials.size() << "\n";
    for (std::size_t i = 0; i < report.trials.size(); ++i) {
        const TrialRecord& t = report.trials[i];
        out << "trial " << i << " seed " << t.seed << " digest " << t.instance_digest << " csp "
            << verdict_name(t.csp) << " scsp " << verdict_name(t.scsp) << " "
            << (t.budget_exhausted ? "budget" : (t.agree ? "agree" : "disagree")) << "\n";
    }
    out << "summary agree " << report.agree_count << " disagree " << report.disagree_count
        << " budget " << report.budget_count << "\n";
    return out.str();
}

std::vector<OperationTable> all_polymorphisms(const Structure& s, int arity, std::int64_t max_tables) {
    const int n = s.universe_size;
    std::int64_t cells = ipow(n, arity);
    // Table count is n^cells; refuse rather than overflow.
    std::int64_t tables = 1;
    for (int i = 0; i < cells; ++i) {
        tables *= n;
        if (tables > max_tables)
            throw CapError("arity-" + std::to_string(arity) + " enumeration needs more than " +
                           std::to_string(max_tables) + " tables");
    }

    std::vector<OperationTable> out;
    OperationTable f{n, arity, std::vector<int>(static_cast<std::size_t>(cells), 0)};
    while (true) {
        if (is_polymorphism(s, f)) out.push_back(f);
        if (!next_tuple(f.values, n)) break;
    }
    return out;
}

GMap gmap_by_enumeration(const Structure& s) {
    const int n = s.universe_size;
    GMap g;
    g.universe_size = n;
    g.structure_fingerprint = fingerprint(s);
    g.entries.assign(static_cast<std::size_t>(ipow(n, n)), 0);

    for (const auto& f : all_polymorphisms(s, n)) {
        std::uint32_t values = 0;
        for (int v : f.values) values |= std::uint32_t{1} << v;
        g.entries[static_cast<std::size_t>(tuple_rank(diagonal(f).values, n))] |= values;
    }
    return g;
}

std::vector<Structure> boolean_corpus() {
    std::vector<Structure> out;
    out.reserve(256);
    for (int mask = 0; mask < 256; ++mask) {
        Structure s(2);
        std::vector<std::vector<int>> tuples;
        for (int rank = 0; rank < 8; ++rank)
            if (mask & (1 << rank)) tuples.push_back(rank_to_tuple(rank, 2, 3));
        s.add_relation("R", 3, std::move(tuples));
        out.push_back(std::move(s));
    }
    return out;
}

CorpusReport run_boolean_corpus(const CorpusOptions& options) {
    CorpusReport report;
    auto corpus = boolean_corpus();
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const Structure& s = corpus[i];
        CorpusRow row;
        row.index = static_cast<int>(i);

        GMap pinned = canonical_g(s);
        GMap enumerated = gmap_by_enumeration(s);
        row.gmap_match = pinned.entries == enumerated.entries;
        if (!row.gmap_match) ++report.gmap_mismatches;

        CautionVerdict caution = is_diagonal_cautious(s);
        row.cautious = caution.cautious;
        if (row.cautious) {
            ++report.cautious_count;
            if (options.run_trials) {
                VerifyOptions vo;
                vo.trials = options.trials;
                vo.seed = options.seed;
                vo.max_vars = options.max_vars;
                vo.max_atoms = options.max_atoms;
                vo.budget = options.budget;
                VerificationReport vr = verify_reduction(s, vo);
                row.agree = vr.agree_count;
                row.disagree = vr.disagree_count;
                row.budget = vr.budget_count;
                report.disagreements += vr.disagree_count;
                report.budget_exhaustions += vr.budget_count;
            }
        }
        report.rows.push_back(row);
    }
    return report;
}

std::string serialize_corpus_report(const CorpusReport& report) {
    std::ostringstream out;
    out << "corpus-report\n";
    for (const CorpusRow& row : report.rows) {
        out << "structure " << row.index << " cautious " << (row.cautious ? "yes" : "no")
            << " gmap-match " << (row.gmap_match ? "yes" : "no");
        if (row.cautious)
            out << " agree " << row.agree << " disagree " << row.disagree << " budget " << row.budget;
        out << "\n";
    }
    out << "summary structures " << report.rows.size() << " cautious " << report.cautious_count
        << " gmap-mismatches " << report.gmap_mismatches << " disagreements "
        << report.disagreements << " budget-exhaustions " << report.budget_exhaustions << "\n";
    return out.str();
}

}  // namespace scsp
