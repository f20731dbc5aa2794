#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace curveforge {

enum class ErrorKind {
    SyntaxError,
    NotHomogeneous,
    DegreeMismatch,
    NotDivisible,
    ZeroPolynomial,
    SingularMatrix,
    ZeroDiscriminant,
    InvalidType,
    Lemma1Violation,
    MultiplicityMismatch,
    NegativeGenus,
    NotAdmissible,
    EmptyRange,
    NonSquareConstantTerm,
    ZeroConstantTerm,
    DegenerateLambdas,
    InfeasibleAssignment,
    PostconditionFailed,
    IndeterminatePoint,
    ExceptionalInput,
    NonSplitDiscriminant,
    GenusZero,
    SizeMismatch,
    InvalidArgument,
};

std::string_view error_kind_name(ErrorKind kind) noexcept;

/// Every domain failure in the library is reported through this type; the
/// kind is what callers (and the CLI's JSON error stream) dispatch on.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

}  // namespace curveforge
