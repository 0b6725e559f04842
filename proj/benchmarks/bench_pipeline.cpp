#include <benchmark/benchmark.h>

#include "lfortho/suites.hpp"

using namespace lfortho;

namespace {

void BM_moment_table(benchmark::State& state) {
    const PrecisionContext ctx(static_cast<unsigned>(state.range(0)));
    const FamilySpec spec = reference_spec(Family::F22);
    for (auto _ : state) {
        auto t = moment_table(spec, 32, ctx);
        benchmark::DoNotOptimize(t.rho.data());
    }
}
BENCHMARK(BM_moment_table)->Arg(256)->Arg(384)->Arg(768);

void BM_pipeline(benchmark::State& state) {
    const PrecisionContext ctx(384);
    const FamilySpec spec = reference_spec(Family::F12);
    for (auto _ : state) {
        Pipeline p = run_pipeline(spec, static_cast<int>(state.range(0)), ctx);
        benchmark::DoNotOptimize(p.data.H.data());
    }
}
BENCHMARK(BM_pipeline)->Arg(8)->Arg(16)->Arg(24);

void BM_structure_matrix(benchmark::State& state) {
    const PrecisionContext ctx(384);
    const FamilySpec spec = reference_spec(Family::F32);
    const Pipeline pipe = run_pipeline(spec, 16, ctx);
    const Operators ops = make_operators(pipe);
    for (auto _ : state) {
        BandedOperator psi = structure_matrix(spec, ops, PsiMethod::sigmaJ_H_PiT);
        benchmark::DoNotOptimize(psi.diags.size());
    }
}
BENCHMARK(BM_structure_matrix);

void BM_forward_run(benchmark::State& state) {
    const PrecisionContext ctx(384);
    const FamilySpec spec = reference_spec(Family::F12);
    for (auto _ : state) {
        LFReport r = lf_forward_run(spec, 8, ctx);
        benchmark::DoNotOptimize(r.steps.data());
    }
}
BENCHMARK(BM_forward_run);

}  // namespace

BENCHMARK_MAIN();
