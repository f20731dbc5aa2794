#include "curveforge/parallel.hpp"

#include "curveforge/admissibility.hpp"

namespace curveforge {

namespace {

template <class T, class F>
Outcome<T> capture(F&& f) {
    Outcome<T> out;
    try {
        out.value = f();
    } catch (const Error& e) {
        out.error = e.kind();
        out.message = e.what();
    }
    return out;
}

template <class T, class In, class F>
std::vector<Outcome<T>> run(const std::vector<In>& in, F f, bool parallel) {
    std::vector<Outcome<T>> out(in.size());
    const long n = static_cast<long>(in.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (long i = 0; i < n; ++i) out[static_cast<size_t>(i)] = capture<T>([&] { return f(in[static_cast<size_t>(i)]); });
    return out;
}

Synthesis synth(const SynthesisJob& j) {
    SynthesizeOptions o;
    o.seed = j.seed;
    return synthesize(j.d, j.g, j.data, o);
}

}  // namespace

std::vector<Outcome<AnalysisReport>> analyze_batch(const std::vector<CurveEquation>& curves) {
    return run<AnalysisReport>(curves, [](const CurveEquation& c) { return analyze(c); }, true);
}

std::vector<Outcome<AnalysisReport>> analyze_batch_serial(const std::vector<CurveEquation>& curves) {
    return run<AnalysisReport>(curves, [](const CurveEquation& c) { return analyze(c); }, false);
}

std::vector<Outcome<Synthesis>> synthesize_batch(const std::vector<SynthesisJob>& jobs) {
    return run<Synthesis>(jobs, synth, true);
}

std::vector<Outcome<Synthesis>> synthesize_batch_serial(const std::vector<SynthesisJob>& jobs) {
    return run<Synthesis>(jobs, synth, false);
}

std::vector<SynthesisJob> enumeration_jobs(int d, int g, std::uint64_t seed) {
    std::vector<SynthesisJob> jobs;
    for (auto& m : enumerate(d, g)) jobs.push_back(SynthesisJob{d, g, std::move(m), seed});
    return jobs;
}

}  // namespace curveforge
