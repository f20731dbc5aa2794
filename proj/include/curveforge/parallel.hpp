#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "curveforge/curve.hpp"
#include "curveforge/error.hpp"
#include "curveforge/synthesis.hpp"

namespace curveforge {

/// A failed item keeps its error kind and message; the batch goes on.
template <class T>
struct Outcome {
    std::optional<T> value;
    std::optional<ErrorKind> error;
    std::string message;
    bool ok() const noexcept { return value.has_value(); }
};

struct SynthesisJob {
    int d = 4;
    int g = 1;
    DataSpec data;
    std::uint64_t seed = 0;
};

/// Results are in input order; the serial versions are the reference.
std::vector<Outcome<AnalysisReport>> analyze_batch(const std::vector<CurveEquation>& curves);
std::vector<Outcome<AnalysisReport>> analyze_batch_serial(const std::vector<CurveEquation>& curves);
std::vector<Outcome<Synthesis>> synthesize_batch(const std::vector<SynthesisJob>& jobs);
std::vector<Outcome<Synthesis>> synthesize_batch_serial(const std::vector<SynthesisJob>& jobs);

/// One job per enumerated data of (d, g), seeded with `seed`.
std::vector<SynthesisJob> enumeration_jobs(int d, int g, std::uint64_t seed = 0);

}  // namespace curveforge
