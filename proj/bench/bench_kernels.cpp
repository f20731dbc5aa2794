// Serial reference vs OpenMP kernel for each sweep. Thread count follows
// OMP_NUM_THREADS.
#include <benchmark/benchmark.h>

#include "curveforge/admissibility.hpp"
#include "curveforge/cremona.hpp"
#include "curveforge/parallel.hpp"

using namespace curveforge;

namespace {

void BM_Enumerate(benchmark::State& st) {
    const bool par = st.range(0) != 0;
    for (auto _ : st) benchmark::DoNotOptimize(par ? enumerate(10, 1) : enumerate_serial(10, 1));
}

const std::vector<SynthesisJob>& jobs() {
    static const auto j = enumeration_jobs(6, 1, 42);
    return j;
}

void BM_SynthesizeBatch(benchmark::State& st) {
    const bool par = st.range(0) != 0;
    for (auto _ : st) benchmark::DoNotOptimize(par ? synthesize_batch(jobs()) : synthesize_batch_serial(jobs()));
}

void BM_AnalyzeBatch(benchmark::State& st) {
    static const std::vector<CurveEquation> curves = [] {
        std::vector<CurveEquation> out;
        for (const auto& o : synthesize_batch(enumeration_jobs(7, 1, 42)))
            if (o.ok()) out.push_back(o.value->curve);
        return out;
    }();
    const bool par = st.range(0) != 0;
    for (auto _ : st) benchmark::DoNotOptimize(par ? analyze_batch(curves) : analyze_batch_serial(curves));
}

void BM_Pgl2(benchmark::State& st) {
    // inequivalent sets force the full triple search
    std::vector<Position> a, b;
    for (int i = 0; i < 12; ++i) {
        a.emplace_back(Rat(i * i + 1));
        b.emplace_back(Rat(i * i * i - 2 * i + 5));
    }
    const bool par = st.range(0) != 0;
    for (auto _ : st) benchmark::DoNotOptimize(par ? pgl2_equivalent(a, b) : pgl2_equivalent_serial(a, b));
}

}  // namespace

BENCHMARK(BM_Enumerate)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SynthesizeBatch)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AnalyzeBatch)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Pgl2)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
