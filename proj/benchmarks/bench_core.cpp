#include <benchmark/benchmark.h>

#include "scsp/caution.hpp"
#include "scsp/gadget.hpp"
#include "scsp/poly_search.hpp"
#include "scsp/random_gen.hpp"
#include "scsp/reduce.hpp"
#include "scsp/solver.hpp"
#include "scsp/verify.hpp"

namespace {

scsp::Structure neq3() {
    scsp::Structure s(3);
    std::vector<std::vector<int>> tuples;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            if (a != b) tuples.push_back({a, b});
    s.add_relation("E", 2, std::move(tuples));
    return s;
}

void BM_CanonicalGNeq3(benchmark::State& state) {
    scsp::Structure s = neq3();
    for (auto _ : state) benchmark::DoNotOptimize(scsp::canonical_g(s));
}
BENCHMARK(BM_CanonicalGNeq3);

void BM_CautionBooleanCorpus(benchmark::State& state) {
    auto corpus = scsp::boolean_corpus();
    for (auto _ : state) {
        int cautious = 0;
        for (const auto& s : corpus)
            if (scsp::is_diagonal_cautious(s).cautious) ++cautious;
        benchmark::DoNotOptimize(cautious);
    }
}
BENCHMARK(BM_CautionBooleanCorpus);

void BM_GadgetEnumerationNeq3(benchmark::State& state) {
    scsp::Structure s = neq3();
    scsp::Gadget g = scsp::build_gadget(s);
    for (auto _ : state) benchmark::DoNotOptimize(scsp::enumerate_solutions(s, g.formula));
}
BENCHMARK(BM_GadgetEnumerationNeq3);

void BM_PinnedSearchNeq3(benchmark::State& state) {
    scsp::Structure s = neq3();
    for (auto _ : state) benchmark::DoNotOptimize(scsp::exists_polymorphism(s, 3));
}
BENCHMARK(BM_PinnedSearchNeq3);

void BM_ReduceAndSolveNeq3(benchmark::State& state) {
    scsp::Structure s = neq3();
    scsp::CautionVerdict caution = scsp::is_diagonal_cautious(s);
    scsp::CspInstance phi = scsp::random_instance(3, s, true, 2, 5);
    for (auto _ : state) {
        scsp::ReduceResult reduced = scsp::reduce(s, phi, caution);
        benchmark::DoNotOptimize(scsp::solve_scsp(s, reduced.instance));
    }
}
BENCHMARK(BM_ReduceAndSolveNeq3);

void BM_VerifyReduction1in3(benchmark::State& state) {
    scsp::Structure s(2);
    s.add_relation("R", 3, {{0, 0, 1}, {0, 1, 0}, {1, 0, 0}});
    scsp::VerifyOptions options;
    options.trials = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(scsp::verify_reduction(s, options));
}
BENCHMARK(BM_VerifyReduction1in3)->Arg(10)->Arg(50);

}  // namespace

BENCHMARK_MAIN();
