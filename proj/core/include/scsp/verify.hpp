#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "scsp/caution.hpp"
#include "scsp/operation.hpp"
#include "scsp/solver.hpp"
#include "scsp/structure.hpp"

namespace scsp {

struct TrialRecord {
    std::uint64_t seed = 0;
    std::string instance_digest;
    Verdict csp = Verdict::No;
    Verdict scsp = Verdict::No;
    bool budget_exhausted = false;
    bool agree = false;  // meaningful only when not budget_exhausted
};

struct VerificationReport {
    std::uint64_t structure_fingerprint = 0;
    bool premise_cautious = false;
    std::vector<TrialRecord> trials;
    int agree_count = 0;
    int disagree_count = 0;
    int budget_count = 0;

    bool all_agree() const { return disagree_count == 0 && budget_count == 0; }
};

struct VerifyOptions {
    int trials = 50;
    std::uint64_t seed = 1;
    int max_vars = 4;
    int max_atoms = 5;
    std::uint64_t budget = kDefaultNodeBudget;
    std::int64_t cap = kDefaultPowerCap;
};

/// End-to-end empirical check of the reduction: per trial, generate a random
/// instance over the expansion by constants, decide it there, reduce, decide
/// the SCSP instance, and record agreement. Trial i uses seed options.seed + i.
/// When the structure is not diagonal-cautious the trials still run and the
/// report is marked premise-unmet.
VerificationReport verify_reduction(const Structure& s, const VerifyOptions& options = {});

std::string serialize_verification_report(const VerificationReport& report);

/// Brute-force enumeration of every arity-k polymorphism, ascending table
/// order. Throws CapError when n^(n^k) exceeds max_tables.
std::vector<OperationTable> all_polymorphisms(const Structure& s, int arity,
                                              std::int64_t max_tables = 1 << 20);

/// Independent route to G_can: enumerate all n-ary tables, filter by
/// is_polymorphism, union images by diagonal. Practical for n = 2 only.
GMap gmap_by_enumeration(const Structure& s);

/// All 256 two-element structures with a single ternary relation R, indexed by
/// the 8-bit mask of included tuples (bit = lexicographic tuple rank).
std::vector<Structure> boolean_corpus();

struct CorpusRow {
    int index = 0;
    bool cautious = false;
    bool gmap_match = false;  // pinned-search G_can == enumeration G_can
    int agree = 0;
    int disagree = 0;
    int budget = 0;
};

struct CorpusOptions {
    int trials = 50;
    std::uint64_t seed = 1;
    int max_vars = 4;
    int max_atoms = 5;
    std::uint64_t budget = kDefaultNodeBudget;
    bool run_trials = true;
};

struct CorpusReport {
    std::vector<CorpusRow> rows;
    int cautious_count = 0;
    int gmap_mismatches = 0;
    int disagreements = 0;
    int budget_exhaustions = 0;

    bool passed() const { return gmap_mismatches == 0 && disagreements == 0 && budget_exhaustions == 0; }
};

/// Runs the full Boolean corpus: the G_can cross-check on every structure and,
/// for the diagonal-cautious ones, the verify_reduction trials.
CorpusReport run_boolean_corpus(const CorpusOptions& options = {});

std::string serialize_corpus_report(const CorpusReport& report);

}  // namespace scsp
